#include <set>

#include "doctest.h"
#include "quintic/errors.hpp"
#include "quintic/oracle.hpp"
#include "quintic/residue.hpp"
#include "support/generators.hpp"

using namespace quintic;

namespace {

const PrimeIdeal& inert(long q) {
  static std::map<long, PrimeIdeal> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, split_prime(q).at(0)).first;
  return it->second;
}

std::vector<PrimeIdeal> support(const ResidueEngine& eng, const CyclotomicInt& a) {
  std::vector<PrimeIdeal> out;
  for (const auto& [P, e] : eng.factor(a).factors) out.push_back(P);
  return out;
}

struct Triple {
  CyclotomicInt beta;
  CyclotomicInt alpha;
  PrimeIdeal prime;
};

Triple random_triple(testing::Gen& gen, const ResidueEngine& eng, std::uint64_t bound = 60) {
  auto beta = gen.smooth_element(bound, static_cast<int>(gen.uniform(1, 2)), 4);
  auto alpha = gen.smooth_element(bound, static_cast<int>(gen.uniform(1, 2)), 4);
  std::vector<PrimeIdeal> cand = support(eng, alpha);
  for (auto& P : support(eng, beta)) cand.push_back(P);
  cand.push_back(lambda_prime());
  return {beta, alpha, gen.pick(cand)};
}

// Sum of the symbol over every prime where it can be nontrivial.
SymbolExponent total(const ResidueEngine& eng, const CyclotomicInt& beta, const CyclotomicInt& alpha) {
  std::set<PrimeIdeal> primes;
  for (auto& P : support(eng, alpha)) primes.insert(P);
  for (auto& P : support(eng, beta)) primes.insert(P);
  primes.insert(lambda_prime());
  SymbolExponent sum;
  for (const auto& P : primes) sum += eng.norm_residue_symbol(beta, alpha, P);
  return sum;
}

}  // namespace

TEST_CASE("power_residue_symbol examples") {
  CHECK(power_residue_symbol(CyclotomicInt::zeta(), inert(2)).value() == 3);
  CHECK(power_residue_symbol(CyclotomicInt::zeta(), inert(7)).value() == 0);
  CHECK(power_residue_symbol(CyclotomicInt(2), inert(3)).value() == 0);
  CHECK(power_residue_symbol(CyclotomicInt::lambda(), inert(3)).value() == 3);
  CHECK(power_residue_symbol(CyclotomicInt::lambda(), inert(2)).value() == 4);
  CHECK(power_residue_symbol(CyclotomicInt::lambda(), inert(7)).value() == 0);

  try {
    power_residue_symbol(CyclotomicInt(2), lambda_prime());
    FAIL("expected SymbolUndefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSymbolUndefined);
  }
  try {
    power_residue_symbol(CyclotomicInt(14), inert(7));
    FAIL("expected SymbolUndefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSymbolUndefined);
  }
}

TEST_CASE("residue field context invariants") {
  for (long p : {2L, 3L, 11L, 19L, 31L, 29L, 41L, 101L}) {
    for (const auto& P : split_prime(p)) {
      auto ctx = residue_field(P);
      CHECK(ctx->degree() == P.residue_degree);
      CHECK((ctx->order() - 1) % 5 == 0);
      auto z = ctx->zeta_image();
      CHECK(ctx->power(z, 5) == ctx->reduce(CyclotomicInt(1)));
      CHECK_FALSE(z == ctx->reduce(CyclotomicInt(1)));
      CHECK(ctx->is_zero(ctx->reduce(P.generator)));
    }
  }
}

TEST_CASE("rational integers are quintic residues at inert primes") {
  testing::Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    long q;
    do q = static_cast<long>(gen.prime_below(400)); while (q % 5 != 2 && q % 5 != 3);
    long a = gen.uniform(-100000, 100000);
    if (a % q == 0) continue;
    CHECK(power_residue_symbol(CyclotomicInt(a), inert(q)).value() == 0);
  }
}

TEST_CASE("fifth powers mod lambda^5") {
  CHECK(lambda5_fifth_power_count() == 4);
  for (long r = 1; r < 25; ++r) {
    if (r % 5 == 0) continue;
    bool fourth = (r * r % 25) * (r * r % 25) % 25 == 1;
    CHECK(is_fifth_power_mod_lambda5(CyclotomicInt(r)) == fourth);
  }
  CHECK(lambda_adic_residue(CyclotomicInt(1)) == std::array<int, 4>{1, 0, 0, 0});
  CHECK(lambda_adic_residue(CyclotomicInt::zeta()) == std::array<int, 4>{1, 4, 0, 0});
  // Q(zeta_25) is ramified over Q(zeta_5) at lambda
  CHECK_FALSE(is_fifth_power_mod_lambda5(CyclotomicInt::zeta()));
  testing::Gen gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = gen.nonzero_element(30);
    if (divides(CyclotomicInt::lambda(), u)) continue;
    CHECK(is_fifth_power_mod_lambda5(u.pow(5)));
  }
}

TEST_CASE("conductor examples") {
  ResidueEngine eng;
  auto c301 = eng.conductor(CyclotomicInt(301));
  CHECK(c301.tame_primes == std::vector<PrimeIdeal>{inert(7), inert(43)});
  CHECK_FALSE(c301.lambda_ramified);
  CHECK(c301.lambda_exponent_bound == 10);

  auto c35 = eng.conductor(CyclotomicInt(35));
  CHECK(c35.tame_primes == std::vector<PrimeIdeal>{inert(7)});
  CHECK(c35.lambda_ramified);

  auto cz = eng.conductor(CyclotomicInt::zeta());
  CHECK(cz.tame_primes.empty());
  CHECK(cz.lambda_ramified);

  // fifth-power content is removed first
  auto c = eng.conductor(CyclotomicInt(7 * 7 * 7 * 7 * 7 * 43));
  CHECK(c.alpha_normalized == CyclotomicInt(43));
  CHECK(c.tame_primes == std::vector<PrimeIdeal>{inert(43)});
}

TEST_CASE("artin_on_kummer examples") {
  ResidueEngine eng;
  CyclotomicFactorization q7;
  q7.unit = 1;
  q7.factors = {{inert(7), 1}};
  CHECK(eng.artin_on_kummer(q7, CyclotomicInt(43)).value() == 0);

  CyclotomicFactorization empty;
  empty.unit = 1;
  CHECK(eng.artin_on_kummer(empty, CyclotomicInt(43)).value() == 0);

  for (const auto& P : split_prime(11)) {
    CyclotomicFactorization q;
    q.unit = 1;
    q.factors = {{P, 2}};
    auto direct = power_residue_symbol(CyclotomicInt::zeta(), P);
    CHECK(eng.artin_on_kummer(q, CyclotomicInt::zeta()) == 2L * direct);
  }

  CyclotomicFactorization bad;
  bad.unit = 1;
  bad.factors = {{inert(7), 1}};
  CHECK_THROWS_AS(eng.artin_on_kummer(bad, CyclotomicInt(35)), Error);
}

TEST_CASE("norm_residue_symbol examples") {
  ResidueEngine eng;
  CHECK(eng.norm_residue_symbol(CyclotomicInt(7), CyclotomicInt(43), inert(7)).value() == 0);
  CHECK(eng.norm_residue_symbol(CyclotomicInt(2), CyclotomicInt(43), inert(7)).value() == 0);
  // (15, lambda / lambda) reduces to (lambda / 3)
  CHECK(eng.norm_residue_symbol(CyclotomicInt(15), CyclotomicInt::lambda(), lambda_prime()).value() == 3);
  CHECK_THROWS_AS(eng.norm_residue_symbol(CyclotomicInt(0), CyclotomicInt(3), inert(3)), Error);
}

TEST_CASE("is_local_norm_everywhere examples") {
  ResidueEngine eng;
  CHECK(eng.is_local_norm_everywhere(CyclotomicInt::zeta(), 301));
  CHECK_FALSE(eng.is_local_norm_everywhere(CyclotomicInt::zeta(), 30));
  for (long n : {2L, 30L, 35L, 301L, 20855L}) CHECK(eng.is_local_norm_everywhere(CyclotomicInt(1), n));
  CHECK_THROWS_AS(eng.is_local_norm_everywhere(CyclotomicInt(2), 301), Error);
}

TEST_CASE("symbol properties on random triples") {
  testing::Gen gen(23);
  ResidueEngine eng;
  for (int trial = 0; trial < 60; ++trial) {
    auto t = random_triple(gen, eng);
    auto v = eng.norm_residue_symbol(t.beta, t.alpha, t.prime);
    CHECK(v.value() >= 0);
    CHECK(v.value() <= 4);

    // antisymmetry
    CHECK((v + eng.norm_residue_symbol(t.alpha, t.beta, t.prime)).is_trivial());

    // bilinearity in both arguments
    auto b2 = gen.smooth_element(60, 1, 3);
    CHECK(eng.norm_residue_symbol(t.beta * b2, t.alpha, t.prime) ==
          v + eng.norm_residue_symbol(b2, t.alpha, t.prime));
    CHECK(eng.norm_residue_symbol(t.beta, t.alpha * b2, t.prime) ==
          v + eng.norm_residue_symbol(t.beta, b2, t.prime));

    // fifth-power degeneracy
    auto g = gen.smooth_element(30, 1, 1);
    CHECK(eng.norm_residue_symbol(g.pow(5) * t.beta, t.alpha, t.prime) == v);

    // Galois equivariance
    long r = gen.uniform(2, 4);
    CHECK(eng.norm_residue_symbol(t.beta.conjugate(r), t.alpha.conjugate(r), conjugate_prime(t.prime, r)) == r * v);
  }
}

TEST_CASE("power residue symbol of fifth powers vanishes") {
  testing::Gen gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    auto P = gen.prime_ideal(300);
    auto g = gen.nonzero_element(100);
    if (divides(P.generator, g)) continue;
    CHECK(power_residue_symbol(g.pow(5), P).is_trivial());
  }
}

TEST_CASE("product formula") {
  testing::Gen gen(25);
  ResidueEngine eng;
  for (int trial = 0; trial < 40; ++trial) {
    auto beta = gen.smooth_element(100, 2, 4);
    auto alpha = gen.smooth_element(100, 2, 4);
    CHECK(total(eng, beta, alpha).is_trivial());
  }
}

TEST_CASE("tame symbols agree with the closed form and across auxiliary samples") {
  testing::Gen gen(26);
  ResidueEngine eng;
  int checked = 0;
  while (checked < 40) {
    auto alpha = gen.smooth_element(80, 2, 4);
    auto beta = gen.smooth_element(80, 2, 4);
    auto cond = eng.conductor(alpha);
    if (cond.tame_primes.empty()) continue;
    const auto& P = gen.pick(cond.tame_primes);
    auto v = eng.norm_residue_symbol(beta, alpha, P);
    CHECK(v == tame_formula_symbol(beta, alpha, P));
    for (std::uint64_t s = 1; s <= 3; ++s) CHECK(eng.tame_symbol(beta, alpha, P, s) == v);
    auto b0 = eng.auxiliary_beta0(beta, alpha, P, 2);
    CHECK(valuation(b0 - beta, P) > valuation(beta, P));
    CHECK(valuation(b0 - CyclotomicInt(1), lambda_prime()) >= 10);
    for (const auto& other : cond.tame_primes)
      if (!(other == P)) CHECK(divides(other.generator, b0 - CyclotomicInt(1)));
    ++checked;
  }
}
