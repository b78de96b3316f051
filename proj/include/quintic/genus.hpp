#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quintic/classify.hpp"
#include "quintic/cyclotomic.hpp"
#include "quintic/residue.hpp"

namespace quintic {

struct AmbiguousRankReport {
  std::vector<PrimeIdeal> ramified;
  int d = 0;
  int q_star = 0;
  int r = 1;
  int o = 1;
  int t = 0;
  // (i, j) with zeta^i (1+zeta)^j a norm from k, sorted.
  std::vector<std::array<int, 2>> norm_unit_subgroup;
  // zeta in S, and the residue criterion N(pi) = 1 mod 25 for all pi | n
  // (only meaningful when lambda is unramified).
  bool zeta_is_norm = false;
  std::optional<bool> zeta_residue_criterion;
};

struct MatrixEntry {
  std::string label;  // "(q)" or "lambda"
  PrimeIdeal prime;
  std::string symbol;  // "(x1,n/pi_j)" or "(x1,lambda/lambda)"
  SymbolExponent engine;
  SymbolExponent reduction;
};

struct DiscrepancyFlag {
  std::string code = "PAPER_DISCREPANCY";
  std::string claim;
  std::string instance;
  int computed = 0;
};

// One hand-derived step of the s = 1 argument, recomputed.
struct DerivationStep {
  std::string symbol;    // e.g. "(q1,q2/q1)"
  std::string instance;  // e.g. "(7,43/7)"
  std::string claim;     // e.g. "= -(q2/q1)" or "!= 0"
  int computed = 0;
  std::optional<int> expected;  // value the claim pins, when it pins one
  bool holds = false;
};

struct Prediction {
  int rank_bound_gamma = 0;
  bool exact = false;
  std::optional<int> h_gamma5;
  std::optional<int> h_k5;
};

struct GenusRankReport {
  FormClassification classification;
  AmbiguousRankReport ambiguous;
  CyclotomicInt x1;
  Integer pi1;  // the rational prime carrying alpha_11
  std::vector<MatrixEntry> entries;
  int s = 0;
  int plus_rank = 0;
  int rank_bound_gamma = 0;
  Prediction theorem;
  Prediction derived;
  std::vector<DerivationStep> derivation;
  std::vector<DiscrepancyFlag> flags;
};

// Rank machinery for k = Q(zeta, n^(1/5)) over Q(zeta). Methods taking a
// classification throw UnsupportedForm unless it is Form1-3.
class GenusAnalyzer {
 public:
  explicit GenusAnalyzer(const ResidueEngine& engine) : engine_(engine) {}

  const ResidueEngine& engine() const { return engine_; }

  // Primes of Q(zeta) ramified in k, sorted.
  std::vector<PrimeIdeal> ramified_primes(const Integer& n) const;

  // d, q*, t and the subgroup S, from local norm tests of all 25 units
  // zeta^i (1+zeta)^j. Throws EvaluationMismatch when S is not a subgroup
  // or the zeta axis disagrees with the residue criterion.
  AmbiguousRankReport rank_ambiguous(const FormClassification& c) const;

  // x1 with k* = k(x1^(1/5)) and the prime pi_1 of the derivation.
  std::pair<CyclotomicInt, Integer> genus_generator(const FormClassification& c) const;

  // Matrix M by the symbol engine and by splitting into rational symbols;
  // throws EvaluationMismatch when the two disagree.
  GenusRankReport genus_matrix(const FormClassification& c) const;

  // genus_matrix plus rank report, predictions, derivation and flags.
  GenusRankReport analyze(const FormClassification& c) const;

  // Theorem-mode prediction: keyed on the form alone.
  static Prediction predict_theorem(const FormClassification& c);
  static Prediction predict_derived(int t, int s);

 private:
  SymbolExponent reduction_entry(const Integer& x1, const Integer& n, const Integer& q) const;
  SymbolExponent reduction_lambda_entry(const Integer& x1) const;
  std::vector<DerivationStep> derivation(const FormClassification& c, const Integer& pi1,
                                         const Integer& other) const;
  std::vector<HypothesisFlag> hypotheses(const FormClassification& c, const Integer& pi1,
                                         const Integer& other) const;

  const ResidueEngine& engine_;
};

}  // namespace quintic
