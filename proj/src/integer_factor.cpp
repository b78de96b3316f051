#include "quintic/integer_factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::uint32_t kTrialBound = 1u << 16;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_round_u64(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin_round(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (x == n_minus_1) return true;
  }
  return false;
}

Integer mod(const Integer& x, const Integer& n) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer half_mod(Integer x, const Integer& n) {
  x = mod(x, n);
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
  return x;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant on machine words; 0 on deadline.
u64 pollard_brent_u64(u64 n, std::mt19937_64& rng, std::chrono::steady_clock::time_point deadline) {
  if (n % 2 == 0) return 2;
  constexpr u64 kBatch = 128;
  while (true) {
    u64 y = rng() % n;
    u64 c = 1 + rng() % (n - 1);
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto step = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
      if (std::chrono::steady_clock::now() > deadline) return 0;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

std::mt19937_64 make_rng(std::uint64_t seed, const Integer& salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(mpz_get_ui(salt.get_mpz_t())),
                    static_cast<std::uint32_t>(mpz_sizeinbase(salt.get_mpz_t(), 2))};
  return std::mt19937_64(seq);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < kTrialBound; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve prime bases are a complete witness set below 3.18e23.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_round_u64(n, a, d, s)) return false;
  }
  return true;
}

bool is_strong_lucas_probable_prime(const Integer& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) return n == 2;
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  long d_param = 5;
  while (true) {
    Integer dz = d_param;
    int j = mpz_jacobi(dz.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dz) != n) return false;
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
  }
  const Integer big_d = d_param;
  const Integer p_param = 1;
  const Integer q_param = (1 - d_param) / 4;

  Integer d = n + 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  Integer u = 1, v = p_param, qk = mod(q_param, n);
  const auto bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (long i = static_cast<long>(bits) - 2; i >= 0; --i) {
    u = mod(u * v, n);
    v = mod(v * v - 2 * qk, n);
    qk = mod(qk * qk, n);
    if (mpz_tstbit(d.get_mpz_t(), i)) {
      Integer u_next = half_mod(p_param * u + v, n);
      Integer v_next = half_mod(big_d * u + p_param * v, n);
      u = u_next;
      v = v_next;
      qk = mod(qk * q_param, n);
    }
  }
  if (u == 0 || v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = mod(v * v - 2 * qk, n);
    qk = mod(qk * qk, n);
    if (v == 0) return true;
  }
  return false;
}

bool is_probable_prime(const Integer& n, std::uint64_t seed) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  for (std::uint32_t p : small_primes()) {
    if (p > 1000) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  if (!miller_rabin_round(n, 2, d, s)) return false;
  auto rng = make_rng(seed, n);
  Integer bound = n - 3;
  for (int round = 0; round < 8; ++round) {
    Integer a;
    mpz_set_ui(a.get_mpz_t(), rng());
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), 64);
    a += static_cast<unsigned long>(rng());
    a = mod(a, bound) + 2;
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return is_strong_lucas_probable_prime(n);
}

Integer pollard_brent(const Integer& n, std::uint64_t seed,
                      std::chrono::steady_clock::time_point deadline) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  auto rng = make_rng(seed, n);
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    u64 f = pollard_brent_u64(mpz_get_ui(n.get_mpz_t()), rng, deadline);
    return Integer(static_cast<unsigned long>(f));
  }
  constexpr unsigned long kBatch = 128;
  while (true) {
    Integer y = mod(Integer(static_cast<unsigned long>(rng())), n);
    Integer c = mod(Integer(static_cast<unsigned long>(rng())), n - 1) + 1;
    Integer g = 1, q = 1, x, ys, diff;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        unsigned long lim = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
      if (std::chrono::steady_clock::now() > deadline) return 0;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

IntegerFactorization factor_integer(const Integer& n_in, const Config& cfg) {
  if (n_in == 0) throw Error(ErrorKind::kInvalidInput, "cannot factor zero");
  const auto deadline = std::chrono::steady_clock::now() + cfg.rho_budget;
  Integer n = abs(n_in);
  std::map<Integer, int> found;

  for (std::uint32_t p : small_primes()) {
    if (n == 1) break;
    if (Integer(p) * p > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[Integer(p)] += e;
  }

  std::vector<std::pair<Integer, int>> pending;
  if (n != 1) pending.emplace_back(n, 1);
  std::uint64_t round = 0;
  while (!pending.empty()) {
    auto [m, mult] = pending.back();
    pending.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m, cfg.seed)) {
      found[m] += mult;
      continue;
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
      bool split = false;
      for (unsigned long k = bits; k >= 2 && !split; --k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
          pending.emplace_back(root, mult * static_cast<int>(k));
          split = true;
        }
      }
      if (split) continue;
    }
    Integer f = pollard_brent(m, cfg.seed + 0x9e3779b97f4a7c15ull * ++round, deadline);
    if (f == 0) {
      throw Error(ErrorKind::kFactorBudgetExceeded,
                  "integer factorization exceeded " + std::to_string(cfg.rho_budget.count()) +
                      " ms on a " + std::to_string(mpz_sizeinbase(m.get_mpz_t(), 10)) +
                      "-digit cofactor");
    }
    Integer cofactor = m / f;
    pending.emplace_back(f, mult);
    pending.emplace_back(cofactor, mult);
  }
  return IntegerFactorization(found.begin(), found.end());
}

Integer sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a = mod(a_in, p);
  if (a == 0 || p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
    throw Error(ErrorKind::kInvalidInput, "sqrt_mod_prime: not a quadratic residue");
  Integer q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  Integer c, r, t, b;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  Integer exp = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = mod(tt * tt, p);
      ++i;
    }
    b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    r = mod(r * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  return r;
}

}  // namespace quintic
