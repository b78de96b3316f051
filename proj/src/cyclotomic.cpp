#include "quintic/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

using Five = std::array<Integer, 5>;

// Coefficients on (1, z, ..., z^4) -> canonical basis.
CyclotomicInt from_five(Five c) {
  return {c[0] - c[4], c[1] - c[4], c[2] - c[4], c[3] - c[4]};
}

Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Nearest integer to num/den (den > 0), ties toward zero.
Integer round_ties_to_zero(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = 2 * r;
  int c = cmp(twice, den);
  if (c > 0) return q + 1;
  if (c < 0) return q;
  return q >= 0 ? q : q + 1;
}

// The product of the three nontrivial conjugates; a * cofactor = norm(a).
CyclotomicInt norm_cofactor(const CyclotomicInt& a) {
  return a.conjugate(2) * a.conjugate(3) * a.conjugate(4);
}

}  // namespace

CyclotomicInt CyclotomicInt::zeta_power(long k) {
  long r = ((k % 5) + 5) % 5;
  Five c{0, 0, 0, 0, 0};
  c[static_cast<std::size_t>(r)] = 1;
  return from_five(c);
}

bool CyclotomicInt::is_zero() const {
  return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0 && coeffs_[3] == 0;
}

CyclotomicInt CyclotomicInt::conjugate(long r) const {
  long rr = ((r % 5) + 5) % 5;
  if (rr == 0) throw Error(ErrorKind::kInvalidInput, "conjugate: exponent divisible by 5");
  Five c{0, 0, 0, 0, 0};
  for (long i = 0; i < 4; ++i) c[static_cast<std::size_t>((i * rr) % 5)] += coeffs_[static_cast<std::size_t>(i)];
  return from_five(c);
}

CyclotomicInt CyclotomicInt::pow(unsigned long e) const {
  CyclotomicInt result(1);
  CyclotomicInt base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) { return *this = *this * o; }

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  std::array<Integer, 7> p{0, 0, 0, 0, 0, 0, 0};
  Integer t;
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      mpz_mul(t.get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      p[i + j] += t;
    }
  }
  return from_five({p[0] + p[5], p[1] + p[6], p[2], p[3], p[4]});
}

CyclotomicInt operator-(const CyclotomicInt& a) {
  return {-a.coeffs_[0], -a.coeffs_[1], -a.coeffs_[2], -a.coeffs_[3]};
}

bool operator<(const CyclotomicInt& a, const CyclotomicInt& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream out;
  out << coeffs_[0] << ',' << coeffs_[1] << ',' << coeffs_[2] << ',' << coeffs_[3];
  return out.str();
}

CyclotomicInt CyclotomicInt::parse(std::string_view text) {
  std::vector<Integer> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    piece.erase(std::remove_if(piece.begin(), piece.end(), [](unsigned char ch) { return std::isspace(ch); }),
                piece.end());
    if (!piece.empty() && piece.front() == '+') piece.erase(piece.begin());
    Integer value;
    if (piece.empty() || value.set_str(piece, 10) != 0)
      throw Error(ErrorKind::kInvalidInput, "malformed cyclotomic integer '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() == 1) return CyclotomicInt(parts[0]);
  if (parts.size() != 4)
    throw Error(ErrorKind::kInvalidInput, "cyclotomic integer needs 4 coefficients: '" + std::string(text) + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

Integer norm(const CyclotomicInt& a) {
  CyclotomicInt n = a * norm_cofactor(a);
  if (!n.is_rational()) throw Error(ErrorKind::kInternal, "norm is not rational");
  return n[0];
}

std::optional<CyclotomicInt> exact_quotient(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (b.is_zero()) return std::nullopt;
  if (b.is_rational()) {
    const Integer& d = b[0];
    for (std::size_t i = 0; i < 4; ++i)
      if (!mpz_divisible_p(a[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    Integer q[4];
    for (std::size_t i = 0; i < 4; ++i) mpz_divexact(q[i].get_mpz_t(), a[i].get_mpz_t(), d.get_mpz_t());
    return CyclotomicInt(q[0], q[1], q[2], q[3]);
  }
  CyclotomicInt cof = norm_cofactor(b);
  CyclotomicInt num = a * cof;
  Integer den = (b * cof)[0];
  for (std::size_t i = 0; i < 4; ++i)
    if (!mpz_divisible_p(num[i].get_mpz_t(), den.get_mpz_t())) return std::nullopt;
  Integer q[4];
  for (std::size_t i = 0; i < 4; ++i) mpz_divexact(q[i].get_mpz_t(), num[i].get_mpz_t(), den.get_mpz_t());
  return CyclotomicInt(q[0], q[1], q[2], q[3]);
}

bool divides(const CyclotomicInt& b, const CyclotomicInt& a) {
  if (b.is_zero()) return a.is_zero();
  return exact_quotient(a, b).has_value();
}

bool is_unit(const CyclotomicInt& a) { return !a.is_zero() && norm(a) == 1; }

CyclotomicInt unit_inverse(const CyclotomicInt& u) {
  auto inv = exact_quotient(CyclotomicInt(1), u);
  if (!inv) throw Error(ErrorKind::kInvalidInput, "unit_inverse: " + u.to_string() + " is not a unit");
  return *inv;
}

EuclideanDivision euclidean_divide(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (b.is_zero()) throw Error(ErrorKind::kInvalidInput, "division by zero");
  CyclotomicInt cof = norm_cofactor(b);
  CyclotomicInt num = a * cof;
  Integer den = (b * cof)[0];
  CyclotomicInt q(round_ties_to_zero(num[0], den), round_ties_to_zero(num[1], den),
                  round_ties_to_zero(num[2], den), round_ties_to_zero(num[3], den));
  CyclotomicInt r = a - q * b;
  Integer nr = norm(r);
  if (nr < den) return {q, r};

  CyclotomicInt best_q = q, best_r = r;
  Integer best = nr;
  for (int mask = 0; mask < 81; ++mask) {
    int m = mask;
    CyclotomicInt shift(m % 3 - 1, (m / 3) % 3 - 1, (m / 9) % 3 - 1, (m / 27) % 3 - 1);
    CyclotomicInt cq = q + shift;
    CyclotomicInt cr = a - cq * b;
    Integer cn = norm(cr);
    if (cn < best) {
      best = cn;
      best_q = cq;
      best_r = cr;
    }
  }
  if (best >= den) throw Error(ErrorKind::kInternal, "euclidean_divide: remainder norm did not decrease");
  return {best_q, best_r};
}

Bezout xgcd(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::kInvalidInput, "gcd(0, 0)");
  CyclotomicInt r0 = a, r1 = b;
  CyclotomicInt x0(1), x1(0), y0(0), y1(1);
  while (!r1.is_zero()) {
    auto [q, r] = euclidean_divide(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    CyclotomicInt x2 = x0 - q * x1;
    x0 = std::move(x1);
    x1 = std::move(x2);
    CyclotomicInt y2 = y0 - q * y1;
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  return {r0, x0, y0};
}

CyclotomicInt reduce_mod(const CyclotomicInt& a, const CyclotomicInt& m) {
  return euclidean_divide(a, m).remainder;
}

CyclotomicInt crt(std::span<const Congruence> congruences) {
  if (congruences.empty()) throw Error(ErrorKind::kInvalidInput, "crt: no congruences");
  for (const auto& c : congruences)
    if (c.modulus.is_zero()) throw Error(ErrorKind::kInvalidInput, "crt: zero modulus");
  CyclotomicInt modulus = congruences[0].modulus;
  CyclotomicInt x = reduce_mod(congruences[0].residue, modulus);
  for (std::size_t i = 1; i < congruences.size(); ++i) {
    const auto& [residue, m] = congruences[i];
    Bezout bz = xgcd(modulus, m);
    if (!is_unit(bz.g))
      throw Error(ErrorKind::kInvalidInput, "crt: moduli " + modulus.to_string() + " and " + m.to_string() +
                                                " are not coprime");
    // s * modulus == 1 (mod m)
    CyclotomicInt s = bz.x * unit_inverse(bz.g);
    CyclotomicInt t = reduce_mod(s * (residue - x), m);
    x = x + modulus * t;
    modulus = modulus * m;
    x = reduce_mod(x, modulus);
  }
  return x;
}

std::string_view to_string(PrimeKind kind) {
  switch (kind) {
    case PrimeKind::kInert: return "Inert";
    case PrimeKind::kSplitDeg1: return "SplitDeg1";
    case PrimeKind::kSplitDeg2: return "SplitDeg2";
    case PrimeKind::kLambda: return "Lambda";
  }
  return "?";
}

Integer PrimeIdeal::norm() const {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(residue_degree));
  return out;
}

std::string PrimeIdeal::label() const {
  switch (kind) {
    case PrimeKind::kLambda: return "lambda";
    case PrimeKind::kInert: return "(" + p.get_str() + ")";
    default: return "(" + p.get_str() + "|" + generator.to_string() + ")";
  }
}

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
  int c = cmp(a.p, b.p);
  if (c != 0) return c < 0;
  return a.generator < b.generator;
}

PrimeIdeal lambda_prime() { return {5, CyclotomicInt::lambda(), 1, 4, PrimeKind::kLambda}; }

std::vector<std::vector<Integer>> cyclotomic_factors_mod(const Integer& p) {
  unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 5);
  std::vector<std::vector<Integer>> out;
  if (r == 0) throw Error(ErrorKind::kInvalidInput, "cyclotomic_factors_mod: p = 5 is ramified");
  if (r == 2 || r == 3) {
    out.push_back({1, 1, 1, 1, 1});
    return out;
  }
  if (r == 1) {
    Integer e = (p - 1) / 5;
    Integer w;
    for (Integer a = 2;; ++a) {
      mpz_powm(w.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      if (w != 1) break;
    }
    Integer root = w;
    for (int k = 1; k <= 4; ++k) {
      out.push_back({mod_nonneg(-root, p), 1});
      root = mod_nonneg(root * w, p);
    }
  } else {
    // z + 1/z is a root of y^2 + y - 1, so y = (-1 +- sqrt 5) / 2.
    Integer s = sqrt_mod_prime(5, p);
    Integer inv2 = (p + 1) / 2;
    for (const Integer& sign : {Integer(1), Integer(-1)}) {
      Integer y = mod_nonneg((-1 + sign * s) * inv2, p);
      out.push_back({1, mod_nonneg(-y, p), 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::mutex& split_cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<Integer, std::vector<PrimeIdeal>>& split_cache() {
  static std::map<Integer, std::vector<PrimeIdeal>> cache;
  return cache;
}

std::vector<PrimeIdeal> compute_split(const Integer& p) {
  if (p == 5) return {lambda_prime()};
  unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 5);
  if (r == 2 || r == 3) return {{p, CyclotomicInt(p), 4, 1, PrimeKind::kInert}};
  const int f = r == 1 ? 1 : 2;
  const PrimeKind kind = r == 1 ? PrimeKind::kSplitDeg1 : PrimeKind::kSplitDeg2;
  Integer expected_norm;
  mpz_pow_ui(expected_norm.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(f));
  std::vector<PrimeIdeal> out;
  for (const auto& factor : cyclotomic_factors_mod(p)) {
    CyclotomicInt lifted(factor[0], factor[1], factor.size() > 2 ? factor[2] : Integer(0), 0);
    CyclotomicInt g = gcd(CyclotomicInt(p), lifted);
    if (norm(g) != expected_norm)
      throw Error(ErrorKind::kInternal, "split_prime: generator above " + p.get_str() + " has wrong norm");
    out.push_back({p, g, f, 1, kind});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PrimeIdeal> split_prime(const Integer& p) {
  {
    std::lock_guard<std::mutex> lock(split_cache_mutex());
    auto it = split_cache().find(p);
    if (it != split_cache().end()) return it->second;
  }
  if (!is_probable_prime(p)) throw Error(ErrorKind::kNonPrime, p.get_str() + " is not prime");
  auto primes = compute_split(p);
  std::lock_guard<std::mutex> lock(split_cache_mutex());
  split_cache().emplace(p, primes);
  return primes;
}

int valuation(const CyclotomicInt& a, const PrimeIdeal& prime) {
  if (a.is_zero()) throw Error(ErrorKind::kInvalidInput, "valuation of zero");
  int v = 0;
  CyclotomicInt rest = a;
  while (auto q = exact_quotient(rest, prime.generator)) {
    rest = std::move(*q);
    ++v;
  }
  return v;
}

PrimeIdeal prime_containing(const Integer& p, const CyclotomicInt& x) {
  for (const auto& prime : split_prime(p)) {
    if (divides(prime.generator, x)) return prime;
  }
  throw Error(ErrorKind::kInternal, "no prime above " + p.get_str() + " contains " + x.to_string());
}

PrimeIdeal conjugate_prime(const PrimeIdeal& prime, long r) {
  if (prime.kind == PrimeKind::kInert || prime.kind == PrimeKind::kLambda) return prime;
  return prime_containing(prime.p, prime.generator.conjugate(r));
}

CyclotomicInt CyclotomicFactorization::expand() const {
  CyclotomicInt out = unit;
  for (const auto& [prime, e] : factors) out *= prime.generator.pow(static_cast<unsigned long>(e));
  return out;
}

int CyclotomicFactorization::exponent_of(const PrimeIdeal& prime) const {
  for (const auto& [q, e] : factors)
    if (q == prime) return e;
  return 0;
}

CyclotomicFactorization factor_element(const CyclotomicInt& a, const Config& cfg) {
  if (a.is_zero()) throw Error(ErrorKind::kInvalidInput, "cannot factor zero");
  IntegerFactorization rational = a.is_rational() ? factor_integer(a[0], cfg) : factor_integer(norm(a), cfg);
  CyclotomicFactorization out;
  CyclotomicInt rest = a;
  for (const auto& [p, unused] : rational) {
    for (const auto& prime : split_prime(p)) {
      int v = 0;
      while (auto q = exact_quotient(rest, prime.generator)) {
        rest = std::move(*q);
        ++v;
      }
      if (v > 0) {
        out.factors.emplace_back(prime, v);
        if (prime.kind == PrimeKind::kLambda) out.e_lambda = v;
      }
    }
  }
  if (!is_unit(rest)) throw Error(ErrorKind::kInternal, "factor_element: cofactor is not a unit");
  out.unit = rest;
  return out;
}

}  // namespace quintic
