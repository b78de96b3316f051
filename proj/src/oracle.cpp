#include "quintic/oracle.hpp"

#include "quintic/errors.hpp"

namespace quintic {

namespace {

std::uint64_t to_u64_mod(const Integer& x, std::uint64_t p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

}  // namespace

SmallResidueField::SmallResidueField(const PrimeIdeal& prime) {
  if (prime.kind == PrimeKind::kLambda) throw Error(ErrorKind::kInvalidInput, "no residue field oracle at lambda");
  if (prime.p >= (Integer(1) << 31)) throw Error(ErrorKind::kInvalidInput, "prime too large for the oracle");
  p_ = prime.p.get_ui();
  for (const auto& g : cyclotomic_factors_mod(prime.p)) {
    g_.clear();
    for (const auto& c : g) g_.push_back(to_u64_mod(c, p_));
    f_ = static_cast<int>(g_.size()) - 1;
    if (is_zero(reduce(prime.generator))) return;
  }
  throw Error(ErrorKind::kInternal, "no factor of the cyclotomic polynomial vanishes on " + prime.label());
}

std::uint64_t SmallResidueField::order() const {
  std::uint64_t n = 1;
  for (int i = 0; i < f_; ++i) n *= p_;
  return n;
}

SmallResidueField::Element SmallResidueField::reduce(const CyclotomicInt& a) const {
  std::array<std::uint64_t, 7> c{};
  for (std::size_t i = 0; i < 4; ++i) c[i] = to_u64_mod(a[i], p_);
  for (int k = 3; k >= f_; --k) {
    std::uint64_t lead = c[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    for (int i = 0; i <= f_; ++i) {
      auto& slot = c[static_cast<std::size_t>(k - f_ + i)];
      slot = (slot + (p_ - lead) * g_[static_cast<std::size_t>(i)]) % p_;
    }
  }
  Element out{};
  for (int i = 0; i < f_; ++i) out[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
  return out;
}

SmallResidueField::Element SmallResidueField::multiply(const Element& a, const Element& b) const {
  std::array<std::uint64_t, 7> c{};
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j)
      c[static_cast<std::size_t>(i + j)] =
          (c[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p_;
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    std::uint64_t lead = c[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    for (int i = 0; i <= f_; ++i) {
      auto& slot = c[static_cast<std::size_t>(k - f_ + i)];
      slot = (slot + (p_ - lead) * g_[static_cast<std::size_t>(i)]) % p_;
    }
  }
  Element out{};
  for (int i = 0; i < f_; ++i) out[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
  return out;
}

SmallResidueField::Element SmallResidueField::one() const {
  Element e{};
  e[0] = 1;
  return e;
}

SmallResidueField::Element SmallResidueField::power(Element a, std::uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1) r = multiply(r, a);
    a = multiply(a, a);
    e >>= 1;
  }
  return r;
}

bool SmallResidueField::is_zero(const Element& a) const {
  for (int i = 0; i < f_; ++i)
    if (a[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

std::uint64_t SmallResidueField::encode(const Element& a) const {
  std::uint64_t idx = 0;
  for (int i = f_; i-- > 0;) idx = idx * p_ + a[static_cast<std::size_t>(i)];
  return idx;
}

SmallResidueField::Element SmallResidueField::decode(std::uint64_t index) const {
  Element out{};
  for (int i = 0; i < f_; ++i) {
    out[static_cast<std::size_t>(i)] = index % p_;
    index /= p_;
  }
  return out;
}

QuinticPowerTable::QuinticPowerTable(const PrimeIdeal& prime) : field_(prime) {
  if (prime.norm() > kEnumerationBound)
    throw Error(ErrorKind::kInvalidInput, "N(" + prime.label() + ") = " + prime.norm().get_str() +
                                              " exceeds the enumeration bound");
  const std::uint64_t n = field_.order();
  member_.assign(n, false);
  for (std::uint64_t i = 1; i < n; ++i) {
    auto x = field_.decode(i);
    auto x2 = field_.multiply(x, x);
    auto x5 = field_.multiply(field_.multiply(x2, x2), x);
    auto idx = field_.encode(x5);
    if (!member_[idx]) {
      member_[idx] = true;
      ++size_;
    }
  }
}

bool QuinticPowerTable::contains(const SmallResidueField::Element& a) const { return member_[field_.encode(a)]; }

bool QuinticPowerTable::contains(const CyclotomicInt& a) const { return contains(field_.reduce(a)); }

QuinticPowerTable brute_quintic_table(const PrimeIdeal& prime) { return QuinticPowerTable(prime); }

CyclotomicInt relative_norm(const KummerElement& gamma, const Integer& n) {
  bool zero = true;
  for (const auto& g : gamma) zero = zero && g.is_zero();
  if (zero) throw Error(ErrorKind::kInvalidInput, "relative norm of zero");

  KummerElement acc{CyclotomicInt(1), 0, 0, 0, 0};
  const CyclotomicInt theta5(n);
  for (long i = 0; i < 5; ++i) {
    KummerElement conj;
    for (std::size_t k = 0; k < 5; ++k)
      conj[k] = gamma[k] * CyclotomicInt::zeta_power(i * static_cast<long>(k));
    KummerElement next{0, 0, 0, 0, 0};
    for (std::size_t a = 0; a < 5; ++a) {
      if (acc[a].is_zero()) continue;
      for (std::size_t b = 0; b < 5; ++b) {
        if (conj[b].is_zero()) continue;
        CyclotomicInt term = acc[a] * conj[b];
        if (a + b >= 5) term *= theta5;
        next[(a + b) % 5] += term;
      }
    }
    acc = std::move(next);
  }
  for (std::size_t k = 1; k < 5; ++k)
    if (!acc[k].is_zero()) throw Error(ErrorKind::kInternal, "relative norm is not in Q(zeta)");
  return acc[0];
}

PrimeClass parse_prime_class(std::string_view name) {
  if (name == "pm2mod5") return PrimeClass::kPm2Mod5;
  if (name == "pm7mod25") return PrimeClass::kPm7Mod25;
  if (name == "not_pm7mod25_and_pm2mod5") return PrimeClass::kPm2Mod5NotPm7Mod25;
  throw Error(ErrorKind::kInvalidInput, "unknown prime class '" + std::string(name) + "'");
}

std::string_view to_string(PrimeClass cls) {
  switch (cls) {
    case PrimeClass::kPm2Mod5: return "pm2mod5";
    case PrimeClass::kPm7Mod25: return "pm7mod25";
    case PrimeClass::kPm2Mod5NotPm7Mod25: return "not_pm7mod25_and_pm2mod5";
  }
  return "?";
}

std::vector<std::uint64_t> prime_stream(PrimeClass cls, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; out.size() < count; ++p) {
    if (!is_prime_u64(p)) continue;
    const bool pm2 = p % 5 == 2 || p % 5 == 3;
    const bool pm7 = p % 25 == 7 || p % 25 == 18;
    bool keep = false;
    switch (cls) {
      case PrimeClass::kPm2Mod5: keep = pm2; break;
      case PrimeClass::kPm7Mod25: keep = pm7; break;
      case PrimeClass::kPm2Mod5NotPm7Mod25: keep = pm2 && !pm7; break;
    }
    if (keep) out.push_back(p);
  }
  return out;
}

SymbolExponent tame_formula_symbol(const CyclotomicInt& beta, const CyclotomicInt& alpha, const PrimeIdeal& prime) {
  if (beta.is_zero() || alpha.is_zero()) throw Error(ErrorKind::kInvalidInput, "symbol of zero");
  SmallResidueField field(prime);
  auto strip = [&](CyclotomicInt x, int& v) {
    v = 0;
    while (auto q = exact_quotient(x, prime.generator)) {
      x = *q;
      ++v;
    }
    return x;
  };
  int a = 0;
  int b = 0;
  const CyclotomicInt alpha_free = strip(alpha, a);
  const CyclotomicInt beta_free = strip(beta, b);

  const std::uint64_t e = (field.order() - 1) / 5;
  const auto zeta = field.reduce(CyclotomicInt::zeta());
  auto log = [&](const CyclotomicInt& x) {
    auto w = field.power(field.reduce(x), e);
    auto z = field.one();
    for (int k = 0; k < 5; ++k) {
      if (z == w) return k;
      z = field.multiply(z, zeta);
    }
    throw Error(ErrorKind::kInternal, "power residue outside the fifth roots of unity");
  };
  return SymbolExponent(static_cast<long>(a) * log(beta_free) - static_cast<long>(b) * log(alpha_free));
}

}  // namespace quintic
