#pragma once

#include <cstdint>
#include <vector>

#include "nclp/cpmap.hpp"
#include "nclp/random.hpp"

namespace nclp {

struct EstimatorConfig {
  int restarts = 32;
  int max_iters = 500;
  double rel_tol = 1e-10;
  std::uint64_t seed = kDefaultSeed;
  /// 0 picks resolve_threads() defaults.
  int threads = 0;
  /// Extra starting witnesses, ascended after the random restarts.
  std::vector<CMatrix> seeds;

  void validate() const;
};

/// Certified lower bound for ||U: S^p -> S^p||: value = ||U(witness)||_p with ||witness||_p = 1.
struct NormEstimate {
  double value = 0.0;
  CMatrix witness;
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
};

struct AscentResult {
  double value = 0.0;
  CMatrix witness;
  int iterations = 0;
  bool converged = false;
  /// Objective after each accepted step, starting with the initial point.
  std::vector<double> history;
};

/// ||U(Y)||_p / ||Y||_p.
double norm_ratio(const SuperOperator& u, const CMatrix& y, double p);

/// One alternating dual ascent from `start`:
///   Z = dual_element(U(Y), p),  Y <- dual_element(U*(Z), q),  q = p/(p-1).
/// Every 8 steps, and before stopping, the last step is extrapolated with doubling
/// lengths while that improves the objective. The objective is non-decreasing;
/// iteration stops when the relative gain drops below rel_tol or after max_iters steps.
AscentResult ascend(const SuperOperator& u, double p, const CMatrix& start, int max_iters, double rel_tol,
                    bool record_history = false);

/// Best witness over random restarts, configured seeds and a fixed probe set (all
/// matrix units; for n = 2 also anti-diagonal [[0, a], [b, 0]] with a^p + b^p = 1).
/// Restarts run in parallel; the result does not depend on the thread count.
NormEstimate estimate_norm(const SuperOperator& u, double p, const EstimatorConfig& cfg = {});

/// Single-threaded reference of estimate_norm; bit-identical results.
NormEstimate estimate_norm_serial(const SuperOperator& u, double p, const EstimatorConfig& cfg = {});

/// Euclidean gradient of Y -> ||Y||_p, p in (1, inf):
/// ||Y||_p^(1-p) U diag(sigma^(p-1)) V*. The real part of entry (i, j) is the
/// derivative along Re Y_ij and the imaginary part along Im Y_ij.
CMatrix schatten_gradient(const CMatrix& y, double p);

}  // namespace nclp
