#include <doctest.h>

#include "crsym/suites.hpp"

using namespace crsym;

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 10);
  CHECK(names.back() == "all");
}

TEST_CASE("unknown suites and invalid parameters are rejected up front") {
  CHECK_THROWS_AS(run_suite("nosuch", {}), UnknownSuite);
  SuiteParams p;
  p.d = 2;
  p.s = 5;
  try {
    validate_suite("prop1", p);
    FAIL("expected a parameter error");
  } catch (const ParamError& e) {
    CHECK(e.reasons().size() == 2);
  }
  SuiteParams w;
  w.n = 2;
  w.w1 = 0;
  w.w2 = 0;
  CHECK_THROWS_AS(validate_suite("reduction", w), ParamError);
  SuiteParams only_w1;
  only_w1.n = 1;
  only_w1.w1 = 0;
  CHECK_THROWS_AS(validate_suite("composition", only_w1), ParamError);
  SuiteParams k9;
  k9.k = 9;
  CHECK_THROWS_AS(validate_suite("classalg", k9), ParamError);
}

TEST_CASE("classalg suite with k=3") {
  SuiteParams p;
  p.k = 3;
  VerificationReport r = run_suite("classalg", p);
  CHECK(r.passed());
  auto j = r.to_json();
  CHECK(j["params"]["k"] == "3");
  CHECK(j["suite"] == "classalg");
}

TEST_CASE("reports are reproducible for a fixed seed") {
  SuiteParams p;
  p.seed = 17;
  p.k = 2;
  VerificationReport a = run_suite("commutant", p), b = run_suite("commutant", p);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(report_csv(a) == report_csv(b));
}

TEST_CASE("small parameterized runs") {
  SuiteParams r;
  r.n = 1;
  r.deg = 2;
  CHECK(run_suite("reduction", r).passed());
  SuiteParams w;
  w.n = 1;
  w.w1 = 0;
  w.w2 = -1;
  w.deg = 2;
  CHECK(run_suite("reduction", w).passed());
  SuiteParams q;
  q.d = 4;
  q.s = 2;
  q.n = 3;
  CHECK(run_suite("prop1", q).passed());
  SuiteParams c;
  c.n = 1;
  c.deg = 2;
  c.w1 = 0;
  c.w2 = -1;
  CHECK(run_suite("composition", c).status() == Status::finding);
}

TEST_CASE("csv layout") {
  SuiteParams p;
  p.k = 2;
  std::string csv = report_csv(run_suite("classalg", p));
  CHECK(csv.rfind("suite,check,status,cases,note\n", 0) == 0);
  CHECK(csv.find("\"overall\",pass") != std::string::npos);
}
