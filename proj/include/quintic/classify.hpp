#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quintic/config.hpp"
#include "quintic/integer_factor.hpp"

namespace quintic {

enum class Form { kForm1, kForm2, kForm3, kUnsupported };

std::string_view to_string(Form form);

struct PrimeCongruence {
  Integer q;
  int exponent = 1;
  int mod5 = 0;
  int mod25 = 0;
  bool pm2_mod5 = false;
  bool pm7_mod25 = false;
};

struct HypothesisFlag {
  std::string claim;     // e.g. "(5/q1) != 1"
  int computed = 0;      // symbol exponent
  bool holds = false;
};

// n = q1^e1 * q2 (Form1), 5*q1 (Form2) or 5*q1*q2 (Form3).
struct FormClassification {
  Integer n;
  Form form = Form::kUnsupported;
  Integer q1 = 0;
  int e1 = 0;
  Integer q2 = 0;  // 0 for Form2
  std::string reason;  // set for kUnsupported
  IntegerFactorization factors;
  std::vector<PrimeCongruence> congruences;  // one per prime factor, ascending
  int n_mod25 = 0;
  std::vector<HypothesisFlag> hypothesis_flags;

  bool supported() const { return form != Form::kUnsupported; }
  // q1^e1 * q2, 5*q1 or 5*q1*q2.
  Integer recompose() const;
};

// Throws InvalidInput for n < 2, NotFifthPowerFree if p^5 | n.
IntegerFactorization factor_rational(const Integer& n, const Config& cfg = {});

FormClassification classify(const Integer& n, const Config& cfg = {});

// Rational criterion for the prime above 5 to ramify in Q(zeta, n^(1/5)):
// 5 | n or n^4 != 1 mod 25.
bool lambda_ramified(const Integer& n);

bool is_pm2_mod5(const Integer& q);
bool is_pm7_mod25(const Integer& q);

}  // namespace quintic
