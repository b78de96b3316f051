#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quintic/config.hpp"
#include "quintic/cyclotomic.hpp"

namespace quintic {

// Element of F_5: the exponent e of a fifth root of unity zeta^e.
class SymbolExponent {
 public:
  constexpr SymbolExponent() = default;
  constexpr explicit SymbolExponent(long v) : value_(static_cast<int>(((v % 5) + 5) % 5)) {}

  constexpr int value() const { return value_; }
  constexpr bool is_trivial() const { return value_ == 0; }

  friend constexpr SymbolExponent operator+(SymbolExponent a, SymbolExponent b) {
    return SymbolExponent(a.value_ + b.value_);
  }
  friend constexpr SymbolExponent operator-(SymbolExponent a, SymbolExponent b) {
    return SymbolExponent(a.value_ - b.value_);
  }
  friend constexpr SymbolExponent operator-(SymbolExponent a) { return SymbolExponent(-a.value_); }
  friend constexpr SymbolExponent operator*(long k, SymbolExponent a) {
    return SymbolExponent((k % 5) * a.value_);
  }
  SymbolExponent& operator+=(SymbolExponent o) { return *this = *this + o; }
  friend constexpr bool operator==(SymbolExponent a, SymbolExponent b) { return a.value_ == b.value_; }

 private:
  int value_ = 0;
};

// Z[zeta]/P for P not above 5, as F_p[x]/(g) with g the factor of the
// fifth cyclotomic polynomial that vanishes on P's generator.
class ResidueFieldCtx {
 public:
  using Element = std::vector<Integer>;  // degree < f, low to high

  explicit ResidueFieldCtx(const PrimeIdeal& prime);

  const PrimeIdeal& prime() const { return prime_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  Integer order() const { return prime_.norm(); }
  // Monic, low to high.
  const std::vector<Integer>& modulus() const { return modulus_; }
  const Element& zeta_image() const { return zeta_; }

  Element reduce(const CyclotomicInt& a) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(Element base, const Integer& e) const;
  bool is_zero(const Element& a) const;
  // e with w == zeta^e, if w is a fifth root of unity.
  std::optional<int> log_zeta(const Element& w) const;

 private:
  Element reduce_poly(std::vector<Integer> c) const;

  PrimeIdeal prime_;
  std::vector<Integer> modulus_;
  Element zeta_;
  std::array<Element, 5> zeta_powers_;
};

// Shared, immutable context for P (cached).
std::shared_ptr<const ResidueFieldCtx> residue_field(const PrimeIdeal& prime);

// (alpha / P)_5 as the e with alpha^((N P - 1)/5) == zeta^e mod P.
// Throws SymbolUndefined for P = lambda or P | alpha.
SymbolExponent power_residue_symbol(const CyclotomicInt& alpha, const PrimeIdeal& prime);

// Residue of a modulo lambda^5 in the lambda-adic digits
// (a0 mod 25, a1 mod 5, a2 mod 5, a3 mod 5) of a = sum a_i lambda^i.
std::array<int, 4> lambda_adic_residue(const CyclotomicInt& a);

// Whether the lambda-unit a is congruent to a fifth power modulo lambda^5,
// by lookup in the table of fifth powers of all 2500 units of Z[zeta]/lambda^5.
bool is_fifth_power_mod_lambda5(const CyclotomicInt& a);
std::size_t lambda5_fifth_power_count();

struct KummerConductor {
  CyclotomicInt alpha_normalized;
  CyclotomicFactorization factorization;  // of alpha_normalized
  std::vector<PrimeIdeal> tame_primes;
  bool lambda_ramified = false;
  int lambda_exponent_bound = 10;

  bool is_tame(const PrimeIdeal& prime) const;
};

// Norm residue symbols (beta, alpha / P)_5 in Q(zeta_5).
//
// Unramified P: -v_P(beta) * (alpha/P). Tamely ramified P: the Artin symbol
// of the prime-to-P part of an auxiliary beta_0 with beta_0 = beta mod
// P^(v_P(beta)+1), beta_0 = 1 modulo the other tame primes and lambda^10.
// P = lambda: minus the sum over every other prime, by the product formula.
//
// Thread-safe; factorizations and conductors are memoized.
class ResidueEngine {
 public:
  explicit ResidueEngine(Config cfg = {});

  const Config& config() const { return cfg_; }

  CyclotomicFactorization factor(const CyclotomicInt& a) const;
  KummerConductor conductor(const CyclotomicInt& alpha) const;

  // Sum of v_Q * (alpha/Q) over the primes of q.
  SymbolExponent artin_on_kummer(const CyclotomicFactorization& q, const CyclotomicInt& alpha) const;

  SymbolExponent norm_residue_symbol(const CyclotomicInt& beta, const CyclotomicInt& alpha,
                                     const PrimeIdeal& prime) const;

  // The auxiliary number for a tame prime. sample 0 is the size-reduced CRT
  // solution; other samples add a pseudo-random multiple of the modulus.
  CyclotomicInt auxiliary_beta0(const CyclotomicInt& beta, const CyclotomicInt& alpha, const PrimeIdeal& prime,
                                std::uint64_t sample) const;
  // Tame-case symbol evaluated through auxiliary_beta0(..., sample).
  SymbolExponent tame_symbol(const CyclotomicInt& beta, const CyclotomicInt& alpha, const PrimeIdeal& prime,
                             std::uint64_t sample) const;

  // Whether the unit u is a norm from Q(zeta, n^(1/5)): every ramified
  // prime has trivial symbol (u, n / P).
  bool is_local_norm_everywhere(const CyclotomicInt& u, const Integer& n) const;

 private:
  struct Beta0Plan {
    CyclotomicInt base;
    CyclotomicInt modulus;
    int p_valuation = 0;
  };
  Beta0Plan plan_beta0(const CyclotomicInt& beta, const KummerConductor& cond, const PrimeIdeal& prime) const;
  CyclotomicInt sample_beta0(const Beta0Plan& plan, const CyclotomicInt& beta, const CyclotomicInt& alpha,
                             const PrimeIdeal& prime, std::uint64_t sample) const;
  SymbolExponent artin_of_beta0(const CyclotomicInt& beta0, const KummerConductor& cond, const PrimeIdeal& prime,
                                int p_valuation, const Config& cfg) const;

  Config cfg_;
  mutable std::mutex mu_;
  mutable std::map<CyclotomicInt, CyclotomicFactorization> factor_cache_;
  mutable std::map<CyclotomicInt, KummerConductor> conductor_cache_;
};

}  // namespace quintic
