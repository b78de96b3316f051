#include "quintic/residue.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr int kBeta0Attempts = 8;
constexpr int kLambdaOvershoot = 10;

Integer mod_p(const Integer& x, const Integer& p) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

// --- residue fields ---------------------------------------------------------

ResidueFieldCtx::ResidueFieldCtx(const PrimeIdeal& prime) : prime_(prime) {
  if (prime.kind == PrimeKind::kLambda)
    throw Error(ErrorKind::kSymbolUndefined, "no quintic residue symbol at lambda");
  for (auto& g : cyclotomic_factors_mod(prime.p)) {
    modulus_ = g;
    if (is_zero(reduce(prime.generator))) break;
    modulus_.clear();
  }
  if (modulus_.empty())
    throw Error(ErrorKind::kInternal, "no cyclotomic factor mod " + prime.p.get_str() + " matches " + prime.label());
  zeta_ = reduce(CyclotomicInt::zeta());
  Element one = reduce(CyclotomicInt(1));
  zeta_powers_[0] = one;
  for (std::size_t k = 1; k < 5; ++k) zeta_powers_[k] = multiply(zeta_powers_[k - 1], zeta_);
  if (zeta_powers_[1] == one || multiply(zeta_powers_[4], zeta_) != one)
    throw Error(ErrorKind::kInternal, "image of zeta does not have order 5");
}

ResidueFieldCtx::Element ResidueFieldCtx::reduce_poly(std::vector<Integer> c) const {
  const std::size_t f = modulus_.size() - 1;
  const Integer& p = prime_.p;
  for (auto& x : c) x = mod_p(x, p);
  for (std::size_t k = c.size(); k-- > f;) {
    if (c[k] == 0) continue;
    Integer lead = c[k];
    for (std::size_t i = 0; i <= f; ++i) c[k - f + i] -= lead * modulus_[i];
    for (std::size_t i = k - f; i <= k; ++i) c[i] = mod_p(c[i], p);
  }
  c.resize(f);
  return c;
}

ResidueFieldCtx::Element ResidueFieldCtx::reduce(const CyclotomicInt& a) const {
  return reduce_poly({a[0], a[1], a[2], a[3]});
}

ResidueFieldCtx::Element ResidueFieldCtx::multiply(const Element& a, const Element& b) const {
  std::vector<Integer> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return reduce_poly(std::move(c));
}

ResidueFieldCtx::Element ResidueFieldCtx::power(Element base, const Integer& e) const {
  if (base.size() == 1) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base[0].get_mpz_t(), e.get_mpz_t(), prime_.p.get_mpz_t());
    return {r};
  }
  Element result = reduce(CyclotomicInt(1));
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = multiply(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = multiply(result, base);
  }
  return result;
}

bool ResidueFieldCtx::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

std::optional<int> ResidueFieldCtx::log_zeta(const Element& w) const {
  for (int k = 0; k < 5; ++k)
    if (zeta_powers_[static_cast<std::size_t>(k)] == w) return k;
  return std::nullopt;
}

std::shared_ptr<const ResidueFieldCtx> residue_field(const PrimeIdeal& prime) {
  static std::mutex mu;
  static std::map<PrimeIdeal, std::shared_ptr<const ResidueFieldCtx>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prime);
    if (it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<const ResidueFieldCtx>(prime);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(prime, ctx).first->second;
}

SymbolExponent power_residue_symbol(const CyclotomicInt& alpha, const PrimeIdeal& prime) {
  if (prime.kind == PrimeKind::kLambda)
    throw Error(ErrorKind::kSymbolUndefined, "power residue symbol at lambda is undefined");
  auto ctx = residue_field(prime);
  auto a = ctx->reduce(alpha);
  if (ctx->is_zero(a))
    throw Error(ErrorKind::kSymbolUndefined, alpha.to_string() + " is divisible by " + prime.label());
  Integer e = (ctx->order() - 1) / 5;
  auto log = ctx->log_zeta(ctx->power(std::move(a), e));
  if (!log) throw Error(ErrorKind::kInternal, "power residue is not a fifth root of unity");
  return SymbolExponent(*log);
}

// --- lambda-adic fifth powers ------------------------------------------------

std::array<int, 4> lambda_adic_residue(const CyclotomicInt& a) {
  // z = 1 - lambda
  Integer d0 = a[0] + a[1] + a[2] + a[3];
  Integer d1 = -a[1] - 2 * a[2] - 3 * a[3];
  Integer d2 = a[2] + 3 * a[3];
  Integer d3 = -a[3];
  return {static_cast<int>(mpz_fdiv_ui(d0.get_mpz_t(), 25)), static_cast<int>(mpz_fdiv_ui(d1.get_mpz_t(), 5)),
          static_cast<int>(mpz_fdiv_ui(d2.get_mpz_t(), 5)), static_cast<int>(mpz_fdiv_ui(d3.get_mpz_t(), 5))};
}

namespace {

const std::set<std::array<int, 4>>& lambda5_fifth_powers() {
  static const std::set<std::array<int, 4>> table = [] {
    std::set<std::array<int, 4>> out;
    const CyclotomicInt lam = CyclotomicInt::lambda();
    const CyclotomicInt lam2 = lam * lam;
    const CyclotomicInt lam3 = lam2 * lam;
    for (long a0 = 1; a0 < 25; ++a0) {
      if (a0 % 5 == 0) continue;
      for (long a1 = 0; a1 < 5; ++a1)
        for (long a2 = 0; a2 < 5; ++a2)
          for (long a3 = 0; a3 < 5; ++a3) {
            CyclotomicInt x = CyclotomicInt(a0) + CyclotomicInt(a1) * lam + CyclotomicInt(a2) * lam2 +
                              CyclotomicInt(a3) * lam3;
            out.insert(lambda_adic_residue(x.pow(5)));
          }
    }
    return out;
  }();
  return table;
}

}  // namespace

bool is_fifth_power_mod_lambda5(const CyclotomicInt& a) {
  auto key = lambda_adic_residue(a);
  if (key[0] % 5 == 0) throw Error(ErrorKind::kInvalidInput, "is_fifth_power_mod_lambda5: not a lambda-unit");
  return lambda5_fifth_powers().count(key) != 0;
}

std::size_t lambda5_fifth_power_count() { return lambda5_fifth_powers().size(); }

// --- engine -------------------------------------------------------------------

bool KummerConductor::is_tame(const PrimeIdeal& prime) const {
  return std::find(tame_primes.begin(), tame_primes.end(), prime) != tame_primes.end();
}

ResidueEngine::ResidueEngine(Config cfg) : cfg_(cfg) {}

CyclotomicFactorization ResidueEngine::factor(const CyclotomicInt& a) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = factor_cache_.find(a);
    if (it != factor_cache_.end()) return it->second;
  }
  auto f = factor_element(a, cfg_);
  std::lock_guard<std::mutex> lock(mu_);
  return factor_cache_.emplace(a, std::move(f)).first->second;
}

KummerConductor ResidueEngine::conductor(const CyclotomicInt& alpha) const {
  if (alpha.is_zero()) throw Error(ErrorKind::kInvalidInput, "conductor of zero");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = conductor_cache_.find(alpha);
    if (it != conductor_cache_.end()) return it->second;
  }
  const auto full = factor(alpha);
  KummerConductor out;
  out.factorization.unit = full.unit;
  for (const auto& [prime, e] : full.factors) {
    int r = e % 5;
    if (r == 0) continue;
    out.factorization.factors.emplace_back(prime, r);
    if (prime.kind == PrimeKind::kLambda) {
      out.factorization.e_lambda = r;
    } else {
      out.tame_primes.push_back(prime);
    }
  }
  out.alpha_normalized = out.factorization.expand();
  out.lambda_ramified = out.factorization.e_lambda != 0 || !is_fifth_power_mod_lambda5(out.alpha_normalized);
  std::lock_guard<std::mutex> lock(mu_);
  return conductor_cache_.emplace(alpha, std::move(out)).first->second;
}

SymbolExponent ResidueEngine::artin_on_kummer(const CyclotomicFactorization& q, const CyclotomicInt& alpha) const {
  const auto cond = conductor(alpha);
  SymbolExponent sum;
  for (const auto& [prime, e] : q.factors) {
    if (prime.kind == PrimeKind::kLambda || cond.is_tame(prime))
      throw Error(ErrorKind::kInvalidInput, "artin_on_kummer: " + prime.label() + " ramifies in the Kummer extension");
    sum += static_cast<long>(e) * power_residue_symbol(cond.alpha_normalized, prime);
  }
  return sum;
}

ResidueEngine::Beta0Plan ResidueEngine::plan_beta0(const CyclotomicInt& beta, const KummerConductor& cond,
                                                   const PrimeIdeal& prime) const {
  Beta0Plan plan;
  plan.p_valuation = valuation(beta, prime);
  std::vector<Congruence> system;
  system.push_back({beta, prime.generator.pow(static_cast<unsigned long>(plan.p_valuation + 1))});
  for (const auto& other : cond.tame_primes)
    if (!(other == prime)) system.push_back({CyclotomicInt(1), other.generator});
  system.push_back({CyclotomicInt(1), CyclotomicInt::lambda().pow(kLambdaOvershoot)});
  plan.modulus = CyclotomicInt(1);
  for (const auto& c : system) plan.modulus *= c.modulus;
  plan.base = crt(system);
  return plan;
}

CyclotomicInt ResidueEngine::sample_beta0(const Beta0Plan& plan, const CyclotomicInt& beta,
                                          const CyclotomicInt& alpha, const PrimeIdeal& prime,
                                          std::uint64_t sample) const {
  if (sample == 0) return plan.base;
  std::uint64_t h = fnv1a(beta.to_string());
  h = fnv1a(alpha.to_string(), h);
  h = fnv1a(prime.label(), h);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed), static_cast<std::uint32_t>(cfg_.seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> coef(-2, 2);
  CyclotomicInt k;
  do {
    k = CyclotomicInt(coef(rng), coef(rng), coef(rng), coef(rng));
  } while (k.is_zero());
  return plan.base + k * plan.modulus;
}

SymbolExponent ResidueEngine::artin_of_beta0(const CyclotomicInt& beta0, const KummerConductor& cond,
                                             const PrimeIdeal& prime, int p_valuation, const Config& cfg) const {
  auto f = factor_element(beta0, cfg);
  CyclotomicFactorization rest;
  rest.unit = f.unit;
  for (const auto& [q, e] : f.factors) {
    if (q == prime) {
      if (e != p_valuation) throw Error(ErrorKind::kInternal, "auxiliary number has the wrong valuation");
      continue;
    }
    if (q.kind == PrimeKind::kLambda || cond.is_tame(q))
      throw Error(ErrorKind::kInternal, "auxiliary number meets the conductor at " + q.label());
    rest.factors.emplace_back(q, e);
  }
  SymbolExponent sum;
  for (const auto& [q, e] : rest.factors)
    sum += static_cast<long>(e) * power_residue_symbol(cond.alpha_normalized, q);
  return sum;
}

CyclotomicInt ResidueEngine::auxiliary_beta0(const CyclotomicInt& beta, const CyclotomicInt& alpha,
                                             const PrimeIdeal& prime, std::uint64_t sample) const {
  const auto cond = conductor(alpha);
  if (!cond.is_tame(prime))
    throw Error(ErrorKind::kInvalidInput, prime.label() + " is not tamely ramified for " + alpha.to_string());
  return sample_beta0(plan_beta0(beta, cond, prime), beta, alpha, prime, sample);
}

SymbolExponent ResidueEngine::tame_symbol(const CyclotomicInt& beta, const CyclotomicInt& alpha,
                                          const PrimeIdeal& prime, std::uint64_t sample) const {
  if (beta.is_zero() || alpha.is_zero()) throw Error(ErrorKind::kInvalidInput, "norm residue symbol of zero");
  const auto cond = conductor(alpha);
  if (!cond.is_tame(prime))
    throw Error(ErrorKind::kInvalidInput, prime.label() + " is not tamely ramified for " + alpha.to_string());
  auto plan = plan_beta0(beta, cond, prime);
  return artin_of_beta0(sample_beta0(plan, beta, alpha, prime, sample), cond, prime, plan.p_valuation, cfg_);
}

SymbolExponent ResidueEngine::norm_residue_symbol(const CyclotomicInt& beta, const CyclotomicInt& alpha,
                                                  const PrimeIdeal& prime) const {
  if (beta.is_zero() || alpha.is_zero()) throw Error(ErrorKind::kInvalidInput, "norm residue symbol of zero");
  const auto cond = conductor(alpha);

  if (prime.kind == PrimeKind::kLambda) {
    std::set<PrimeIdeal> support(cond.tame_primes.begin(), cond.tame_primes.end());
    for (const auto& [q, e] : factor(beta).factors)
      if (q.kind != PrimeKind::kLambda) support.insert(q);
    SymbolExponent sum;
    for (const auto& q : support) sum += norm_residue_symbol(beta, alpha, q);
    return -sum;
  }

  if (!cond.is_tame(prime)) {
    int b = valuation(beta, prime);
    if (b == 0) return SymbolExponent(0);
    return -(static_cast<long>(b) * power_residue_symbol(cond.alpha_normalized, prime));
  }

  auto plan = plan_beta0(beta, cond, prime);
  const auto slice = cfg_.rho_budget / 16;
  for (int attempt = 0; attempt < kBeta0Attempts; ++attempt) {
    Config attempt_cfg = cfg_;
    attempt_cfg.rho_budget = attempt + 1 < kBeta0Attempts ? slice : cfg_.rho_budget - slice * (kBeta0Attempts - 1);
    CyclotomicInt beta0 = sample_beta0(plan, beta, alpha, prime, static_cast<std::uint64_t>(attempt));
    try {
      return artin_of_beta0(beta0, cond, prime, plan.p_valuation, attempt_cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kFactorBudgetExceeded) throw;
    }
  }
  throw Error(ErrorKind::kFactorBudgetExceeded, "no auxiliary number for " + prime.label() +
                                                    " could be factored within the budget");
}

bool ResidueEngine::is_local_norm_everywhere(const CyclotomicInt& u, const Integer& n) const {
  if (!is_unit(u)) throw Error(ErrorKind::kInvalidInput, u.to_string() + " is not a unit");
  if (n < 2) throw Error(ErrorKind::kInvalidInput, "n must be at least 2");
  const CyclotomicInt alpha(n);
  const auto cond = conductor(alpha);
  for (const auto& prime : cond.tame_primes)
    if (!norm_residue_symbol(u, alpha, prime).is_trivial()) return false;
  if (cond.lambda_ramified && !norm_residue_symbol(u, alpha, lambda_prime()).is_trivial()) return false;
  return true;
}

}  // namespace quintic
