#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "quintic/cyclotomic.hpp"
#include "quintic/residue.hpp"

namespace quintic {

// Z[zeta]/P as F_p[x]/(g) in plain 64-bit arithmetic, independent of
// ResidueFieldCtx. Elements are coefficient vectors of length f.
class SmallResidueField {
 public:
  using Element = std::array<std::uint64_t, 4>;

  // Requires p < 2^31 and P not lambda.
  explicit SmallResidueField(const PrimeIdeal& prime);

  std::uint64_t p() const { return p_; }
  int degree() const { return f_; }
  std::uint64_t order() const;

  Element reduce(const CyclotomicInt& a) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(Element a, std::uint64_t e) const;
  Element one() const;
  bool is_zero(const Element& a) const;

  // Mixed-radix index in [0, order), and its inverse.
  std::uint64_t encode(const Element& a) const;
  Element decode(std::uint64_t index) const;

 private:
  std::uint64_t p_ = 0;
  int f_ = 0;
  std::vector<std::uint64_t> g_;  // monic, low to high, size f+1
};

// Every nonzero fifth power of Z[zeta]/P, by enumeration.
class QuinticPowerTable {
 public:
  static constexpr std::uint64_t kEnumerationBound = 10'000'000;

  // Throws InvalidInput when N(P) exceeds the bound.
  explicit QuinticPowerTable(const PrimeIdeal& prime);

  const SmallResidueField& field() const { return field_; }
  std::uint64_t size() const { return size_; }
  bool contains(const CyclotomicInt& a) const;
  bool contains(const SmallResidueField::Element& a) const;

 private:
  SmallResidueField field_;
  std::vector<bool> member_;
  std::uint64_t size_ = 0;
};

QuinticPowerTable brute_quintic_table(const PrimeIdeal& prime);

// Element of Z[zeta][theta] with theta^5 = n, coefficients of 1..theta^4.
using KummerElement = std::array<CyclotomicInt, 5>;

// Product of gamma(zeta^i theta) over i = 0..4. Throws InvalidInput for
// gamma = 0 and Internal if theta survives in the product.
CyclotomicInt relative_norm(const KummerElement& gamma, const Integer& n);

enum class PrimeClass { kPm2Mod5, kPm7Mod25, kPm2Mod5NotPm7Mod25 };

PrimeClass parse_prime_class(std::string_view name);
std::string_view to_string(PrimeClass cls);

// The first `count` primes of the class, ascending.
std::vector<std::uint64_t> prime_stream(PrimeClass cls, std::size_t count);

// Closed form of the tame symbol: with a = v_P(alpha), b = v_P(beta),
// (beta, alpha / P) = a (beta'/P) - b (alpha'/P) where the primes denote
// the P-free parts beta / pi^b and alpha / pi^a.
SymbolExponent tame_formula_symbol(const CyclotomicInt& beta, const CyclotomicInt& alpha, const PrimeIdeal& prime);

}  // namespace quintic
