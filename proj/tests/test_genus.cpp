#include "doctest.h"
#include "quintic/errors.hpp"
#include "quintic/genus.hpp"
#include "quintic/tables.hpp"
#include "support/generators.hpp"

using namespace quintic;

namespace {

std::vector<std::string> labels(const std::vector<PrimeIdeal>& primes) {
  std::vector<std::string> out;
  for (const auto& p : primes) out.push_back(p.label());
  return out;
}

}  // namespace

TEST_CASE("ramified primes and d") {
  ResidueEngine eng;
  GenusAnalyzer ga(eng);
  CHECK(labels(ga.ramified_primes(301)) == std::vector<std::string>{"(7)", "(43)"});
  CHECK(labels(ga.ramified_primes(35)) == std::vector<std::string>{"(7)", "lambda"});
  CHECK(labels(ga.ramified_primes(30)) == std::vector<std::string>{"(2)", "(3)", "lambda"});
}

TEST_CASE("q* and t for the three forms") {
  ResidueEngine eng;
  GenusAnalyzer ga(eng);
  auto r301 = ga.rank_ambiguous(classify(301));
  CHECK(r301.d == 2);
  CHECK(r301.q_star == 2);
  CHECK(r301.t == 1);
  CHECK(r301.zeta_is_norm);
  CHECK(r301.zeta_residue_criterion == std::optional<bool>(true));

  auto r35 = ga.rank_ambiguous(classify(35));
  CHECK(r35.d == 2);
  CHECK(r35.q_star == 2);
  CHECK(r35.t == 1);

  auto r30 = ga.rank_ambiguous(classify(30));
  CHECK(r30.d == 3);
  CHECK(r30.q_star == 1);
  CHECK(r30.t == 1);
  CHECK_FALSE(r30.zeta_is_norm);
  CHECK(r30.norm_unit_subgroup.size() == 5);

  CHECK(GenusAnalyzer::predict_derived(1, 0).rank_bound_gamma == 1);
  CHECK(GenusAnalyzer::predict_derived(2, 2).rank_bound_gamma == 0);
  CHECK_THROWS_AS(ga.rank_ambiguous(classify(77)), Error);
}

TEST_CASE("genus generator") {
  ResidueEngine eng;
  GenusAnalyzer ga(eng);
  CHECK(ga.genus_generator(classify(301)).first == CyclotomicInt(7));
  CHECK(ga.genus_generator(classify(35)).first == CyclotomicInt(7));
  CHECK(ga.genus_generator(classify(30)).first == CyclotomicInt(15));
  auto g = ga.genus_generator(classify(20855));  // 43 = -7 mod 25
  CHECK(g.first == CyclotomicInt(5 * 97));
  CHECK(g.second == 43);
  auto h = ga.genus_generator(classify(105));  // 7 = 7 mod 25
  CHECK(h.first == CyclotomicInt(15));
  CHECK(h.second == 7);
}

TEST_CASE("genus matrix examples") {
  ResidueEngine eng;
  GenusAnalyzer ga(eng);

  auto m301 = ga.analyze(classify(301));
  REQUIRE(m301.entries.size() == 2);
  CHECK(m301.entries[0].label == "(7)");
  CHECK(m301.entries[0].engine.value() == 0);
  CHECK(m301.s == 0);
  CHECK(m301.rank_bound_gamma == 1);
  CHECK_FALSE(m301.derived.exact);
  bool alpha11 = false;
  for (const auto& f : m301.flags) alpha11 = alpha11 || (f.code == "PAPER_DISCREPANCY" && f.claim == "alpha_11 != 0");
  CHECK(alpha11);

  auto m35 = ga.analyze(classify(35));
  CHECK(m35.entries.front().engine.value() == 0);
  CHECK(m35.entries.back().label == "lambda");
  CHECK(m35.entries.back().engine.value() == 0);  // (lambda/7)
  CHECK(m35.classification.hypothesis_flags.back().claim == "(5/q1) != 1");
  CHECK_FALSE(m35.classification.hypothesis_flags.back().holds);

  auto m30 = ga.analyze(classify(30));
  CHECK(m30.entries.back().label == "lambda");
  CHECK(m30.entries.back().engine.value() == 3);  // (lambda/3)
  CHECK(m30.s == 1);
  CHECK(m30.derived.exact);
  CHECK(m30.derived.h_k5 == 5);
}

TEST_CASE("genus matrix is insensitive to fifth powers in x1") {
  ResidueEngine eng;
  testing::Gen gen(41);
  for (long n : {301L, 35L, 30L}) {
    auto cls = classify(n);
    GenusAnalyzer ga(eng);
    auto x1 = ga.genus_generator(cls).first;
    for (int trial = 0; trial < 5; ++trial) {
      auto g = gen.smooth_element(40, 1, 1);
      for (const auto& e : ga.genus_matrix(cls).entries) {
        auto alpha = e.prime.kind == PrimeKind::kLambda ? CyclotomicInt::lambda() : CyclotomicInt(n);
        CHECK(eng.norm_residue_symbol(g.pow(5) * x1, alpha, e.prime) == e.engine);
      }
    }
  }
}

TEST_CASE("every table row: rank constants, route agreement, theorem prediction") {
  ResidueEngine eng;
  GenusAnalyzer ga(eng);
  for (int which = 1; which <= 3; ++which) {
    for (const auto& row : regenerate_table(which).rows) {
      auto c = classify(row.n);
      auto rep = ga.analyze(c);
      CAPTURE(row.n);
      CHECK(rep.ambiguous.d == (which == 3 ? 3 : 2));
      CHECK(rep.ambiguous.q_star == (which == 3 ? 1 : 2));
      CHECK(rep.ambiguous.t == 1);
      for (const auto& e : rep.entries) CHECK(e.engine == e.reduction);
      CHECK(rep.theorem.h_gamma5 == 1);
      CHECK(rep.theorem.h_k5 == 5);
      CHECK(rep.rank_bound_gamma == rep.ambiguous.t - rep.s);
      CHECK(rep.rank_bound_gamma >= 0);
      CHECK(rep.rank_bound_gamma <= 1);
      CHECK(rep.s <= 1);
      for (const auto& ij : rep.ambiguous.norm_unit_subgroup) CHECK((ij[0] < 5 && ij[1] < 5));
    }
  }
}
