#pragma once

#include "nclp/io.hpp"
#include "nclp/normest.hpp"

namespace nclp {

/// Norm report for the embedded map of (t, state) at (p, theta):
/// lower_bound and witness from estimate_norm, the compatibility constants, and an
/// upper bound only where one is proven for the certified hypotheses (CP and p >= 2,
/// or CP and theta = 1/2). In the central interval for p < 2 only the basis is given.
io::json norm_report(const SuperOperator& t, const State& state, double p, double theta,
                     const EstimatorConfig& cfg = {});

/// Best qubit-family witness as JSON, or the string "none". Rejects p >= 2, where
/// every cell is bounded.
io::json counterexample_report(double p, double theta, double tol);

/// Rows needed before the divergence table of `per_factor` exceeds this level.
inline constexpr double kDivergenceLevel = 10.0;

}  // namespace nclp
