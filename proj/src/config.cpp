#include "quintic/config.hpp"
#include "quintic/errors.hpp"

#include <cstdlib>
#include <string>

namespace quintic {

namespace {

std::uint64_t parse_env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    std::string text(raw);
    auto value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::kInvalidInput,
                std::string("environment variable ") + name + " is not an unsigned integer");
  }
}

}  // namespace

Config Config::from_env() {
  Config cfg;
  cfg.seed = parse_env_u64("QUINTIC_SEED", cfg.seed);
  cfg.rho_budget = std::chrono::milliseconds(
      parse_env_u64("QUINTIC_RHO_BUDGET_MS", static_cast<std::uint64_t>(cfg.rho_budget.count())));
  return cfg;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kNonPrime: return "NonPrime";
    case ErrorKind::kNotFifthPowerFree: return "NotFifthPowerFree";
    case ErrorKind::kUnsupportedForm: return "UnsupportedForm";
    case ErrorKind::kSymbolUndefined: return "SymbolUndefined";
    case ErrorKind::kFactorBudgetExceeded: return "FactorBudgetExceeded";
    case ErrorKind::kEvaluationMismatch: return "EvaluationMismatch";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
    case ErrorKind::kNonPrime:
    case ErrorKind::kNotFifthPowerFree:
    case ErrorKind::kSymbolUndefined:
      return 2;
    case ErrorKind::kUnsupportedForm:
      return 3;
    case ErrorKind::kFactorBudgetExceeded:
      return 4;
    case ErrorKind::kEvaluationMismatch:
    case ErrorKind::kInternal:
      return 5;
  }
  return 5;
}

}  // namespace quintic
