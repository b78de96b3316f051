#include "quintic/genus.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

void require_supported(const FormClassification& c) {
  if (!c.supported()) throw Error(ErrorKind::kUnsupportedForm, c.n.get_str() + ": " + c.reason);
}

std::string pair_symbol(const std::string& b, const std::string& a, const std::string& p) {
  return "(" + b + "," + a + "/" + p + ")";
}

std::string residue_symbol(const std::string& a, const std::string& p) { return "(" + a + "/" + p + ")"; }

PrimeIdeal inert_prime(const Integer& q) {
  auto primes = split_prime(q);
  if (primes.size() != 1) throw Error(ErrorKind::kInternal, q.get_str() + " is not inert in Q(zeta)");
  return primes.front();
}

}  // namespace

std::vector<PrimeIdeal> GenusAnalyzer::ramified_primes(const Integer& n) const {
  std::set<PrimeIdeal> out;
  for (const auto& [p, e] : factor_rational(n, engine_.config()))
    if (p != 5)
      for (auto& prime : split_prime(p)) out.insert(prime);
  std::vector<PrimeIdeal> primes(out.begin(), out.end());
  if (lambda_ramified(n)) primes.push_back(lambda_prime());
  return primes;
}

AmbiguousRankReport GenusAnalyzer::rank_ambiguous(const FormClassification& c) const {
  require_supported(c);
  AmbiguousRankReport rep;
  rep.ramified = ramified_primes(c.n);
  rep.d = static_cast<int>(rep.ramified.size());

  const CyclotomicInt alpha(c.n);
  const bool lam = lambda_ramified(c.n);
  if (engine_.conductor(alpha).lambda_ramified != lam)
    throw Error(ErrorKind::kEvaluationMismatch, "lambda ramification: residue test and n^4 mod 25 disagree for " +
                                                    c.n.get_str());

  const CyclotomicInt one_plus_zeta = CyclotomicInt(1) + CyclotomicInt::zeta();
  std::array<std::array<bool, 5>, 5> in_s{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CyclotomicInt u = CyclotomicInt::zeta_power(i) * one_plus_zeta.pow(static_cast<unsigned long>(j));
      in_s[i][j] = engine_.is_local_norm_everywhere(u, c.n);
      if (in_s[i][j]) rep.norm_unit_subgroup.push_back({i, j});
    }
  for (const auto& a : rep.norm_unit_subgroup)
    for (const auto& b : rep.norm_unit_subgroup)
      if (!in_s[(a[0] + b[0]) % 5][(a[1] + b[1]) % 5])
        throw Error(ErrorKind::kEvaluationMismatch, "norm units of " + c.n.get_str() + " are not closed under products");
  switch (rep.norm_unit_subgroup.size()) {
    case 1: rep.q_star = 0; break;
    case 5: rep.q_star = 1; break;
    case 25: rep.q_star = 2; break;
    default:
      throw Error(ErrorKind::kEvaluationMismatch, "norm unit group of " + c.n.get_str() + " has size " +
                                                      std::to_string(rep.norm_unit_subgroup.size()));
  }
  rep.t = rep.d + rep.q_star - (rep.r + 1 + rep.o);

  rep.zeta_is_norm = in_s[1][0];
  if (!lam) {
    bool all = true;
    for (const auto& prime : rep.ramified) all = all && mpz_fdiv_ui(prime.norm().get_mpz_t(), 25) == 1;
    rep.zeta_residue_criterion = all;
    if (all != rep.zeta_is_norm)
      throw Error(ErrorKind::kEvaluationMismatch, "zeta norm test and N(pi) = 1 mod 25 criterion disagree for " +
                                                      c.n.get_str());
  }
  return rep;
}

std::pair<CyclotomicInt, Integer> GenusAnalyzer::genus_generator(const FormClassification& c) const {
  require_supported(c);
  switch (c.form) {
    case Form::kForm1: return {CyclotomicInt(c.q1), c.q1};
    case Form::kForm2: return {CyclotomicInt(c.q1), c.q1};
    case Form::kForm3: {
      // the larger prime off +-7 mod 25 goes under the fifth root with 5
      Integer chosen = is_pm7_mod25(c.q2) ? c.q1 : c.q2;
      Integer other = chosen == c.q1 ? c.q2 : c.q1;
      return {CyclotomicInt(Integer(5 * chosen)), other};
    }
    case Form::kUnsupported: break;
  }
  throw Error(ErrorKind::kUnsupportedForm, c.n.get_str());
}

SymbolExponent GenusAnalyzer::reduction_entry(const Integer& x1, const Integer& n, const Integer& q) const {
  const PrimeIdeal prime = inert_prime(q);
  const auto& cfg = engine_.config();
  SymbolExponent sum;
  for (const auto& [a, i] : factor_rational(x1, cfg))
    for (const auto& [b, j] : factor_rational(n, cfg)) {
      SymbolExponent term;
      if (a == b) {
        term = SymbolExponent(0);  // (a,a) = (a,-1) and -1 is a fifth power
      } else if (a == q) {
        term = -power_residue_symbol(CyclotomicInt(b), prime);
      } else if (b == q) {
        term = power_residue_symbol(CyclotomicInt(a), prime);
      }
      sum += static_cast<long>(i) * static_cast<long>(j) * term;
    }
  return sum;
}

SymbolExponent GenusAnalyzer::reduction_lambda_entry(const Integer& x1) const {
  SymbolExponent sum;
  for (const auto& [a, i] : factor_rational(x1, engine_.config())) {
    if (a == 5) continue;
    for (const auto& prime : split_prime(a))
      sum += static_cast<long>(i) * power_residue_symbol(CyclotomicInt::lambda(), prime);
  }
  return sum;
}

GenusRankReport GenusAnalyzer::genus_matrix(const FormClassification& c) const {
  require_supported(c);
  GenusRankReport rep;
  rep.classification = c;
  auto [x1, pi1] = genus_generator(c);
  rep.x1 = x1;
  rep.pi1 = pi1;
  const CyclotomicInt alpha(c.n);
  const Integer x1_rational = x1[0];

  for (const auto& [q, e] : c.factors) {
    if (q == 5) continue;
    for (const auto& prime : split_prime(q)) {
      MatrixEntry entry;
      entry.label = prime.label();
      entry.prime = prime;
      entry.symbol = "(x1,n/pi_j)";
      entry.engine = engine_.norm_residue_symbol(x1, alpha, prime);
      entry.reduction = reduction_entry(x1_rational, c.n, q);
      rep.entries.push_back(entry);
    }
  }
  if (lambda_ramified(c.n)) {
    MatrixEntry entry;
    entry.label = "lambda";
    entry.prime = lambda_prime();
    entry.symbol = "(x1,lambda/lambda)";
    entry.engine = engine_.norm_residue_symbol(x1, CyclotomicInt::lambda(), lambda_prime());
    entry.reduction = reduction_lambda_entry(x1_rational);
    rep.entries.push_back(entry);
  }
  for (const auto& entry : rep.entries)
    if (!(entry.engine == entry.reduction))
      throw Error(ErrorKind::kEvaluationMismatch, "entry " + entry.symbol + " at " + entry.label + " for n = " +
                                                      c.n.get_str() + ": engine " +
                                                      std::to_string(entry.engine.value()) + ", reduction " +
                                                      std::to_string(entry.reduction.value()));
  rep.s = std::any_of(rep.entries.begin(), rep.entries.end(), [](const MatrixEntry& e) { return !e.engine.is_trivial(); })
              ? 1
              : 0;
  return rep;
}

std::vector<DerivationStep> GenusAnalyzer::derivation(const FormClassification& c, const Integer& pi1,
                                                      const Integer& other) const {
  const PrimeIdeal prime = inert_prime(pi1);
  const std::string p = pi1.get_str();
  const std::string o = other.get_str();
  auto nrs = [&](const Integer& b, const Integer& a) {
    return engine_.norm_residue_symbol(CyclotomicInt(b), CyclotomicInt(a), prime).value();
  };
  auto prs = [&](const Integer& a) { return power_residue_symbol(CyclotomicInt(a), prime).value(); };

  std::vector<DerivationStep> steps;
  auto equal = [&](std::string symbol, std::string instance, std::string claim, int computed, int expected) {
    steps.push_back({std::move(symbol), std::move(instance), std::move(claim), computed, expected, computed == expected});
  };
  auto nonzero = [&](std::string symbol, std::string instance, int computed) {
    steps.push_back({std::move(symbol), std::move(instance), "!= 0", computed, std::nullopt, computed != 0});
  };

  const Integer five = 5;
  if (c.form == Form::kForm1 || c.form == Form::kForm2) {
    const std::string b = c.form == Form::kForm1 ? "q2" : "5";
    equal(pair_symbol("q1", "q1", "q1"), pair_symbol(p, p, p), "= 0", nrs(pi1, pi1), 0);
    equal(pair_symbol("q1", b, "q1"), pair_symbol(p, o, p), "= -" + residue_symbol(b, "q1"), nrs(pi1, other),
          SymbolExponent(-prs(other)).value());
    nonzero(residue_symbol(b, "q1"), residue_symbol(o, p), prs(other));
  } else {
    equal(pair_symbol("5", "5", "q1"), pair_symbol("5", "5", p), "= 0", nrs(five, five), 0);
    equal(pair_symbol("5", "q1", "q1"), pair_symbol("5", p, p), "= " + residue_symbol("5", "q1"), nrs(five, pi1),
          prs(five));
    nonzero(residue_symbol("5", "q1"), residue_symbol("5", p), prs(five));
    equal(pair_symbol("5", "q2", "q1") + "+" + pair_symbol("q2", "5", "q1"),
          pair_symbol("5", o, p) + "+" + pair_symbol(o, "5", p), "= 0",
          SymbolExponent(nrs(five, other) + nrs(other, five)).value(), 0);
    equal(pair_symbol("q2", "q1", "q1"), pair_symbol(o, p, p), "= " + residue_symbol("q2", "q1"), nrs(other, pi1),
          prs(other));
    nonzero(residue_symbol("q2", "q1"), residue_symbol(o, p), prs(other));
    equal(pair_symbol("q2", "q2", "q1"), pair_symbol(o, o, p), "= 0", nrs(other, other), 0);
  }
  return steps;
}

std::vector<HypothesisFlag> GenusAnalyzer::hypotheses(const FormClassification& c, const Integer& pi1,
                                                      const Integer& other) const {
  const PrimeIdeal prime = inert_prime(pi1);
  std::vector<HypothesisFlag> out;
  auto add = [&](const std::string& claim, const Integer& a) {
    int v = power_residue_symbol(CyclotomicInt(a), prime).value();
    out.push_back({claim, v, v != 0});
  };
  if (c.form != Form::kForm2) add("(q2/q1) != 1", other);
  add("(5/q1) != 1", Integer(5));
  return out;
}

Prediction GenusAnalyzer::predict_theorem(const FormClassification& c) {
  require_supported(c);
  return {0, true, 1, 5};
}

Prediction GenusAnalyzer::predict_derived(int t, int s) {
  Prediction p;
  p.rank_bound_gamma = std::max(0, t - s);
  if (p.rank_bound_gamma == 0 && t == 1) {
    p.exact = true;
    p.h_gamma5 = 1;
    p.h_k5 = 5;
  }
  return p;
}

GenusRankReport GenusAnalyzer::analyze(const FormClassification& c) const {
  GenusRankReport rep = genus_matrix(c);
  rep.ambiguous = rank_ambiguous(c);
  rep.plus_rank = 0;
  rep.rank_bound_gamma = rep.ambiguous.t - rep.s + rep.plus_rank;
  rep.theorem = predict_theorem(c);
  rep.derived = predict_derived(rep.ambiguous.t, rep.s);

  const Integer other = c.form == Form::kForm1 ? c.q2 : c.form == Form::kForm2 ? Integer(5) : rep.x1[0] / 5;
  rep.classification.hypothesis_flags = hypotheses(c, rep.pi1, other);
  rep.derivation = derivation(c, rep.pi1, other);

  const auto& first = *std::find_if(rep.entries.begin(), rep.entries.end(),
                                    [&](const MatrixEntry& e) { return e.prime.p == rep.pi1; });
  rep.derivation.push_back({"alpha_11", "(" + rep.x1[0].get_str() + "," + c.n.get_str() + "/" +
                                            rep.pi1.get_str() + ")",
                            "!= 0", first.engine.value(), std::nullopt, !first.engine.is_trivial()});
  for (const auto& step : rep.derivation)
    if (!step.holds) rep.flags.push_back({"PAPER_DISCREPANCY", step.symbol + " " + step.claim, step.instance, step.computed});
  if (rep.s != 1)
    rep.flags.push_back({"PAPER_DISCREPANCY", "s = 1", "rank M for n = " + c.n.get_str(), rep.s});
  return rep;
}

}  // namespace quintic
