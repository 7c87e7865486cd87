#include <doctest.h>

#include "phasesphere/complex.hpp"
#include "phasesphere/mesh.hpp"
#include "phasesphere/verify.hpp"

using namespace phasesphere;

TEST_CASE("reports are deterministic") {
  SuiteParams p;
  p.max_n = 4;
  p.samples = 200;
  p.seed = 5;
  const auto a = run_suite("gamma-roundtrip", p);
  const auto b = run_suite("gamma-roundtrip", p);
  CHECK(a.passed());
  CHECK(report_text(a) == report_text(b));
  CHECK(report_json(a) == report_json(b));
  CHECK(report_json(a).find("seconds") == std::string::npos);
  CHECK(report_json(a, true).find("seconds") != std::string::npos);
}

TEST_CASE("small suites pass") {
  SuiteParams p;
  p.max_n = 4;
  p.m = 4;
  for (const char* s : {"lemma-zero-oracle", "pieces", "sign-spheres", "pn-combinatorics"}) {
    INFO(s);
    CHECK(run_suite(s, p).passed());
  }
}

TEST_CASE("bad suites and parameters are rejected") {
  CHECK_THROWS_AS(run_suite("nope", SuiteParams{}), std::invalid_argument);
  SuiteParams odd;
  odd.m = 3;
  CHECK_THROWS_AS(run_suite("pieces", odd), std::invalid_argument);
}

TEST_CASE("complex JSON round trip") {
  const SimplicialComplex k = assemble_slice(3, 2);
  const std::string text = complex_to_json(k, 3, 2);
  const SimplicialComplex back = complex_from_json(text);
  CHECK(back == k);
  CHECK(complex_to_json(back, 3, 2) == text);

  const auto abstract = SimplicialComplex::from_simplices(3, {{0, 1}, {1, 2}});
  CHECK(complex_from_json(complex_to_json(abstract, 0, 0)) == abstract);
  CHECK_THROWS(complex_from_json("{\"simplices\": 3}"));
}
