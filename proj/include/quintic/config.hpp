#pragma once

#include <chrono>
#include <cstdint>

namespace quintic {

// Run-wide knobs. Every computation is a pure function of its inputs and
// this struct; the rho budget only decides whether a factorization finishes.
struct Config {
  std::uint64_t seed = 1;
  std::chrono::milliseconds rho_budget{30000};

  // Reads QUINTIC_SEED and QUINTIC_RHO_BUDGET_MS, falling back to defaults.
  static Config from_env();
};

}  // namespace quintic
