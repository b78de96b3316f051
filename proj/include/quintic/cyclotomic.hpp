#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quintic/config.hpp"
#include "quintic/integer_factor.hpp"

namespace quintic {

// Element of Z[zeta_5] in the power basis (1, z, z^2, z^3), with
// z^4 = -(1 + z + z^2 + z^3) eliminated eagerly, so equality of values is
// equality of coefficient tuples.
class CyclotomicInt {
 public:
  CyclotomicInt() = default;
  CyclotomicInt(long c0) : coeffs_{Integer(c0), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CyclotomicInt(Integer c0) : coeffs_{std::move(c0), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CyclotomicInt(Integer c0, Integer c1, Integer c2, Integer c3)
      : coeffs_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static CyclotomicInt zeta() { return {0, 1, 0, 0}; }
  // zeta^k for any integer k.
  static CyclotomicInt zeta_power(long k);
  // 1 - zeta, the generator of the prime above 5.
  static CyclotomicInt lambda() { return {1, -1, 0, 0}; }

  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::array<Integer, 4>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return coeffs_[1] == 0 && coeffs_[2] == 0 && coeffs_[3] == 0; }

  // tau_r : zeta -> zeta^r, for r not divisible by 5.
  CyclotomicInt conjugate(long r) const;
  CyclotomicInt pow(unsigned long e) const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator-(const CyclotomicInt& a);

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) { return a.coeffs_ == b.coeffs_; }
  // Lexicographic on the coefficient tuple.
  friend bool operator<(const CyclotomicInt& a, const CyclotomicInt& b);

  // "c0,c1,c2,c3"
  std::string to_string() const;
  static CyclotomicInt parse(std::string_view text);

 private:
  std::array<Integer, 4> coeffs_{0, 0, 0, 0};
};

// Absolute norm to Q; positive for nonzero input, 0 for 0.
Integer norm(const CyclotomicInt& a);

// a / b when b divides a exactly in Z[zeta].
std::optional<CyclotomicInt> exact_quotient(const CyclotomicInt& a, const CyclotomicInt& b);
bool divides(const CyclotomicInt& b, const CyclotomicInt& a);
bool is_unit(const CyclotomicInt& a);
CyclotomicInt unit_inverse(const CyclotomicInt& u);

struct EuclideanDivision {
  CyclotomicInt quotient;
  CyclotomicInt remainder;
};

// a = q*b + r with norm(r) < norm(b). The quotient is the exact field
// quotient rounded coefficientwise (ties toward zero); when that misses,
// the 81 neighbouring lattice points are searched for the smallest remainder.
EuclideanDivision euclidean_divide(const CyclotomicInt& a, const CyclotomicInt& b);

struct Bezout {
  CyclotomicInt g;
  CyclotomicInt x;
  CyclotomicInt y;
};

// g = x*a + y*b generates the ideal (a, b). Not both zero.
Bezout xgcd(const CyclotomicInt& a, const CyclotomicInt& b);
inline CyclotomicInt gcd(const CyclotomicInt& a, const CyclotomicInt& b) { return xgcd(a, b).g; }

struct Congruence {
  CyclotomicInt residue;
  CyclotomicInt modulus;
};

// Simultaneous solution, size-reduced against the product modulus.
// Throws InvalidInput when two moduli are not coprime.
CyclotomicInt crt(std::span<const Congruence> congruences);

// Representative of a modulo m with norm below norm(m).
CyclotomicInt reduce_mod(const CyclotomicInt& a, const CyclotomicInt& m);

enum class PrimeKind { kInert, kSplitDeg1, kSplitDeg2, kLambda };

std::string_view to_string(PrimeKind kind);

struct PrimeIdeal {
  Integer p;
  CyclotomicInt generator;
  int residue_degree = 0;
  int ramification = 1;
  PrimeKind kind = PrimeKind::kInert;

  // p^f
  Integer norm() const;
  std::string label() const;

  friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
    return a.p == b.p && a.generator == b.generator;
  }
  // Ordered by (p, generator coefficients).
  friend bool operator<(const PrimeIdeal& a, const PrimeIdeal& b);
};

PrimeIdeal lambda_prime();

// Primes of Z[zeta] above the rational prime p, sorted by generator.
// Throws NonPrime if p is not prime. Results are cached.
std::vector<PrimeIdeal> split_prime(const Integer& p);

// Irreducible factors of x^4+x^3+x^2+x+1 over F_p (p != 5), monic, as
// coefficient vectors low-to-high, sorted lexicographically.
std::vector<std::vector<Integer>> cyclotomic_factors_mod(const Integer& p);

// v_P(a); a != 0.
int valuation(const CyclotomicInt& a, const PrimeIdeal& prime);

// The canonical prime above p that contains x (x in P, x != 0).
PrimeIdeal prime_containing(const Integer& p, const CyclotomicInt& x);

// tau_r(P) as one of the canonical primes from split_prime.
PrimeIdeal conjugate_prime(const PrimeIdeal& prime, long r);

struct CyclotomicFactorization {
  CyclotomicInt unit;
  std::vector<std::pair<PrimeIdeal, int>> factors;
  int e_lambda = 0;

  // unit * prod(generator^exponent)
  CyclotomicInt expand() const;
  int exponent_of(const PrimeIdeal& prime) const;
};

// Factorization of a != 0 into a unit and prime generators, via the
// rational factorization of its norm. Throws FactorBudgetExceeded.
CyclotomicFactorization factor_element(const CyclotomicInt& a, const Config& cfg);

}  // namespace quintic
