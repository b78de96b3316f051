#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quintic {

enum class ErrorKind {
  kInvalidInput,
  kNonPrime,
  kNotFifthPowerFree,
  kUnsupportedForm,
  kSymbolUndefined,
  kFactorBudgetExceeded,
  kEvaluationMismatch,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

// Process exit code for the command-line tool.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quintic
