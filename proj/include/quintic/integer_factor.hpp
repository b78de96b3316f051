#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "quintic/config.hpp"

namespace quintic {

using Integer = mpz_class;
using IntegerFactorization = std::vector<std::pair<Integer, int>>;

// Deterministic Miller-Rabin for n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Deterministic below 2^64; above that, Miller-Rabin with bases drawn from a
// generator seeded by `seed`, followed by a strong Lucas test.
bool is_probable_prime(const Integer& n, std::uint64_t seed = 1);

// Strong Lucas probable-prime test with Selfridge parameters. n odd, n > 2.
bool is_strong_lucas_probable_prime(const Integer& n);

// Prime factorization of |n| (n != 0), ascending by prime. Trial division,
// perfect-power detection and Pollard-Brent rho. Throws
// FactorBudgetExceeded once cfg.rho_budget of wall time has been spent.
IntegerFactorization factor_integer(const Integer& n, const Config& cfg);

// One nontrivial factor of the composite n via Brent's cycle search.
// Returns 0 when the deadline passes first.
Integer pollard_brent(const Integer& n, std::uint64_t seed,
                      std::chrono::steady_clock::time_point deadline);

// Small primes below `bound` by sieve.
const std::vector<std::uint32_t>& small_primes();

Integer sqrt_mod_prime(const Integer& a, const Integer& p);

}  // namespace quintic
