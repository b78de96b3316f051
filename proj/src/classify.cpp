#include "quintic/classify.hpp"

#include <algorithm>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

int mod_ui(const Integer& n, unsigned long m) { return static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), m)); }

Form unsupported(FormClassification& c, std::string reason) {
  c.reason = std::move(reason);
  return Form::kUnsupported;
}

Form detect(FormClassification& c) {
  std::vector<const PrimeCongruence*> others;
  const PrimeCongruence* five = nullptr;
  for (const auto& pc : c.congruences) {
    if (pc.q == 5) {
      five = &pc;
      continue;
    }
    if (!pc.pm2_mod5)
      return unsupported(c, pc.q.get_str() + " = " + std::to_string(pc.mod5) + " mod 5 is not +-2 mod 5");
    others.push_back(&pc);
  }

  if (five) {
    if (five->exponent != 1) return unsupported(c, "5 divides n more than once");
    if (others.size() == 1) {
      const auto& a = *others[0];
      if (a.exponent != 1) return unsupported(c, "n = 5 * q^e with e > 1");
      if (!a.pm7_mod25) return unsupported(c, "n = 5*q1 with q1 not +-7 mod 25");
      c.q1 = a.q;
      c.e1 = 1;
      return Form::kForm2;
    }
    if (others.size() == 2) {
      const auto& a = *others[0];
      const auto& b = *others[1];
      if (a.exponent != 1 || b.exponent != 1) return unsupported(c, "n = 5*q1*q2 needs squarefree q1, q2");
      if (a.pm7_mod25 && b.pm7_mod25) return unsupported(c, "n = 5*q1*q2 with both q1, q2 = +-7 mod 25");
      c.q1 = a.q;
      c.e1 = 1;
      c.q2 = b.q;
      return Form::kForm3;
    }
    return unsupported(c, "wrong number of prime factors for 5*q1 or 5*q1*q2");
  }

  if (others.size() != 2) return unsupported(c, "wrong number of prime factors for q1^e1*q2");
  const auto* a = others[0];
  const auto* b = others[1];
  if (a->exponent != 1 && b->exponent != 1) return unsupported(c, "q1^e1*q2 needs one exponent equal to 1");
  if (a->exponent == 1 && b->exponent != 1) std::swap(a, b);
  if (!a->pm7_mod25 || !b->pm7_mod25) return unsupported(c, "q1^e1*q2 needs q1, q2 = +-7 mod 25");
  c.q1 = a->q;
  c.e1 = a->exponent;
  c.q2 = b->q;
  return Form::kForm1;
}

}  // namespace

std::string_view to_string(Form form) {
  switch (form) {
    case Form::kForm1: return "form1";
    case Form::kForm2: return "form2";
    case Form::kForm3: return "form3";
    case Form::kUnsupported: return "unsupported";
  }
  return "?";
}

bool is_pm2_mod5(const Integer& q) {
  int r = mod_ui(q, 5);
  return r == 2 || r == 3;
}

bool is_pm7_mod25(const Integer& q) {
  int r = mod_ui(q, 25);
  return r == 7 || r == 18;
}

Integer FormClassification::recompose() const {
  Integer out;
  switch (form) {
    case Form::kForm1:
      mpz_pow_ui(out.get_mpz_t(), q1.get_mpz_t(), static_cast<unsigned long>(e1));
      return out * q2;
    case Form::kForm2: return 5 * q1;
    case Form::kForm3: return 5 * q1 * q2;
    case Form::kUnsupported: break;
  }
  throw Error(ErrorKind::kUnsupportedForm, n.get_str() + ": " + reason);
}

IntegerFactorization factor_rational(const Integer& n, const Config& cfg) {
  if (n < 2) throw Error(ErrorKind::kInvalidInput, "n must be at least 2, got " + n.get_str());
  auto f = factor_integer(n, cfg);
  for (const auto& [p, e] : f)
    if (e >= 5)
      throw Error(ErrorKind::kNotFifthPowerFree,
                  n.get_str() + " is divisible by " + p.get_str() + "^" + std::to_string(e));
  return f;
}

FormClassification classify(const Integer& n, const Config& cfg) {
  FormClassification c;
  c.n = n;
  c.factors = factor_rational(n, cfg);
  c.n_mod25 = mod_ui(n, 25);
  for (const auto& [p, e] : c.factors) {
    PrimeCongruence pc;
    pc.q = p;
    pc.exponent = e;
    pc.mod5 = mod_ui(p, 5);
    pc.mod25 = mod_ui(p, 25);
    pc.pm2_mod5 = is_pm2_mod5(p);
    pc.pm7_mod25 = is_pm7_mod25(p);
    c.congruences.push_back(pc);
  }
  c.form = detect(c);
  return c;
}

bool lambda_ramified(const Integer& n) {
  if (mod_ui(n, 5) == 0) return true;
  Integer r;
  Integer four = 4;
  Integer m = 25;
  mpz_powm(r.get_mpz_t(), n.get_mpz_t(), four.get_mpz_t(), m.get_mpz_t());
  return r != 1;
}

}  // namespace quintic
