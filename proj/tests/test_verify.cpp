#include "doctest.h"

#include "nclp/verify.hpp"

using namespace nclp;

TEST_CASE("invariant suite passes and is deterministic") {
  const VerifyReport a = run_invariant_suite();
  for (const auto& c : a.checks) {
    INFO(c.name << " worst=" << c.worst << " tol=" << c.tolerance << " " << c.detail);
    CHECK(c.passed);
  }
  CHECK(a.passed());
  CHECK(a.checks.size() >= 20);
  const VerifyReport b = run_invariant_suite();
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("invariant suite passes for another seed") {
  const VerifyReport r = run_invariant_suite(12345);
  for (const auto& c : r.checks) {
    INFO(c.name << " worst=" << c.worst << " " << c.detail);
    CHECK(c.passed);
  }
  CHECK(r.to_json()["seed"] == 12345);
}
