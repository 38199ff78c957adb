#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nclp/io.hpp"
#include "nclp/random.hpp"

namespace nclp {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      ///< worst observed violation or error
  double tolerance = 0.0;  ///< threshold `worst` was compared against
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckResult> checks;

  bool passed() const;
  io::json to_json() const;
};

/// Runs every invariant check on instances drawn from `seed`. Deterministic: the
/// same seed gives the same report.
VerifyReport run_invariant_suite(std::uint64_t seed = kDefaultSeed);

}  // namespace nclp
