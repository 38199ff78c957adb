#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nclp/embed.hpp"
#include "nclp/normest.hpp"

namespace nclp {

/// S1 kron S2 on M_{n1 n2}, indexed lexicographically: row (i1, i2) -> i1 n2 + i2,
/// the same convention as kron(). Satisfies (S1 kron S2)(X kron Y) = S1(X) kron S2(Y).
SuperOperator kron_superop(const SuperOperator& s1, const SuperOperator& s2);

/// State with density Gamma1 kron Gamma2.
State kron_state(const State& s1, const State& s2);

/// Product of per-factor lower bounds; a lower bound for the tensor product norm.
double tensor_norm_lower_bound(std::span<const double> values);

struct DivergenceRow {
  int n;
  double lower_bound;
};

struct DivergenceTable {
  std::vector<DivergenceRow> rows;

  /// First n whose bound strictly exceeds `level`.
  std::optional<int> first_exceeding(double level) const;
};

/// Rows (n, per_factor^n), n = 1..n_max.
DivergenceTable divergence_table(double per_factor, int n_max);

/// First n with per_factor^n > level, computed without materializing the table;
/// agrees with divergence_table(per_factor, n).first_exceeding(level).
std::optional<int> rows_to_exceed(double per_factor, double level);

struct TensorFactor {
  SuperOperator map;
  State state;
};

struct TensorEstimate {
  std::vector<NormEstimate> factors;
  NormEstimate joint;
  double product = 0.0;  ///< tensor_norm_lower_bound of the factor values
};

inline constexpr Eigen::Index kDefaultTensorDimCap = 16;

/// Estimates every embedded factor, then the embedded map of the Kronecker product
/// seeded with the product of the factor witnesses. Throws if the total dimension
/// exceeds max_dim.
TensorEstimate estimate_tensor_product(std::span<const TensorFactor> factors, double p, double theta,
                                       const EstimatorConfig& cfg = {},
                                       Eigen::Index max_dim = kDefaultTensorDimCap);

}  // namespace nclp
