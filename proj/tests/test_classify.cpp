#include "doctest.h"
#include "quintic/classify.hpp"
#include "quintic/errors.hpp"
#include "quintic/residue.hpp"
#include "support/generators.hpp"

using namespace quintic;

TEST_CASE("factor_rational examples") {
  CHECK(factor_rational(301) == IntegerFactorization{{7, 1}, {43, 1}});
  CHECK(factor_rational(3035) == IntegerFactorization{{5, 1}, {607, 1}});
  try {
    factor_rational(32);
    FAIL("expected NotFifthPowerFree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotFifthPowerFree);
  }
  try {
    factor_rational(1);
    FAIL("expected InvalidInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidInput);
  }
}

TEST_CASE("classify examples") {
  auto a = classify(301);
  CHECK(a.form == Form::kForm1);
  CHECK(a.q1 == 7);
  CHECK(a.e1 == 1);
  CHECK(a.q2 == 43);
  CHECK(a.n_mod25 == 1);

  auto b = classify(35);
  CHECK(b.form == Form::kForm2);
  CHECK(b.q1 == 7);

  auto c = classify(77);
  CHECK(c.form == Form::kUnsupported);
  CHECK(c.reason.find("11") != std::string::npos);

  auto d = classify(30);
  CHECK(d.form == Form::kForm3);
  CHECK(d.q1 == 2);
  CHECK(d.q2 == 3);

  // q1^e1 q2 with the exponent on q1
  auto e = classify(7 * 7 * 7 * 43);
  CHECK(e.form == Form::kForm1);
  CHECK(e.q1 == 7);
  CHECK(e.e1 == 3);
  CHECK(e.q2 == 43);
  auto f = classify(7 * 43 * 43);
  CHECK(f.q1 == 43);
  CHECK(f.e1 == 2);
  CHECK(f.q2 == 7);

  CHECK(classify(5 * 3).form == Form::kUnsupported);          // 3 is not +-7 mod 25
  CHECK(classify(25 * 7).form == Form::kUnsupported);         // 5^2
  CHECK(classify(5 * 7 * 43).form == Form::kUnsupported);     // both +-7
  CHECK(classify(7 * 7 * 43 * 43).form == Form::kUnsupported);
  CHECK(classify(2 * 3).form == Form::kUnsupported);          // not +-7 mod 25
  CHECK(classify(7).form == Form::kUnsupported);
}

TEST_CASE("lambda_ramified examples") {
  CHECK_FALSE(lambda_ramified(301));
  CHECK(lambda_ramified(35));
  std::vector<int> fourth;
  for (int r = 1; r < 25; ++r)
    if (r % 5 && !lambda_ramified(r)) fourth.push_back(r);
  CHECK(fourth == std::vector<int>{1, 7, 18, 24});
}

TEST_CASE("classification properties") {
  ResidueEngine eng;
  for (long n = 2; n <= 3000; ++n) {
    FormClassification c;
    try {
      c = classify(n);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNotFifthPowerFree);
      continue;
    }
    CHECK(classify(n).form == c.form);
    if (!c.supported()) continue;
    CHECK(c.recompose() == n);
    if (c.form == Form::kForm1) {
      CHECK_FALSE(lambda_ramified(n));
      CHECK(c.q1 != c.q2);
      CHECK(is_pm7_mod25(c.q1));
      CHECK(is_pm7_mod25(c.q2));
    } else {
      CHECK(lambda_ramified(n));
    }
    if (c.form == Form::kForm3) CHECK_FALSE((is_pm7_mod25(c.q1) && is_pm7_mod25(c.q2)));
    if (n % 7 == 0 || n % 10 == 0) CHECK(eng.conductor(CyclotomicInt(n)).lambda_ramified == lambda_ramified(n));
  }
}

TEST_CASE("lambda_ramified matches the lambda^5 test") {
  ResidueEngine eng;
  testing::Gen gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    long n = gen.uniform(2, 10'000'000);
    try {
      factor_rational(n);
    } catch (const Error&) {
      continue;
    }
    CHECK(eng.conductor(CyclotomicInt(n)).lambda_ramified == lambda_ramified(n));
  }
}
