#include "nclp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nclp {

SuperOperator kron_superop(const SuperOperator& s1, const SuperOperator& s2) {
  const Eigen::Index n1 = s1.dim();
  const Eigen::Index n2 = s2.dim();
  const Eigen::Index n = n1 * n2;

  std::vector<CMatrix> images1;
  std::vector<CMatrix> images2;
  for (Eigen::Index j = 0; j < n1; ++j)
    for (Eigen::Index i = 0; i < n1; ++i) images1.push_back(s1.apply(matrix_unit(n1, i, j)));
  for (Eigen::Index j = 0; j < n2; ++j)
    for (Eigen::Index i = 0; i < n2; ++i) images2.push_back(s2.apply(matrix_unit(n2, i, j)));

  // E_{(i1 i2),(j1 j2)} = E_{i1 j1} kron E_{i2 j2}
  CMatrix action(n * n, n * n);
  for (Eigen::Index j1 = 0; j1 < n1; ++j1)
    for (Eigen::Index i1 = 0; i1 < n1; ++i1)
      for (Eigen::Index j2 = 0; j2 < n2; ++j2)
        for (Eigen::Index i2 = 0; i2 < n2; ++i2) {
          const CMatrix image = kron(images1[static_cast<std::size_t>(i1 + j1 * n1)],
                                     images2[static_cast<std::size_t>(i2 + j2 * n2)]);
          const Eigen::Index col = (i1 * n2 + i2) + (j1 * n2 + j2) * n;
          action.col(col) = Eigen::Map<const CVector>(image.data(), n * n);
        }
  return SuperOperator(std::move(action));
}

State kron_state(const State& s1, const State& s2) { return State(kron(s1.matrix(), s2.matrix())); }

double tensor_norm_lower_bound(std::span<const double> values) {
  double product = 1.0;
  for (double v : values) {
    if (!(v >= 0.0)) throw std::invalid_argument("tensor_norm_lower_bound: factor bounds must be >= 0");
    product *= v;
  }
  return product;
}

std::optional<int> DivergenceTable::first_exceeding(double level) const {
  for (const auto& row : rows)
    if (row.lower_bound > level) return row.n;
  return std::nullopt;
}

DivergenceTable divergence_table(double per_factor, int n_max) {
  if (!(per_factor >= 0.0)) throw std::invalid_argument("divergence_table: per_factor must be >= 0");
  if (n_max < 1) throw std::invalid_argument("divergence_table: n_max must be >= 1");
  DivergenceTable table;
  table.rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) table.rows.push_back({n, std::pow(per_factor, n)});
  return table;
}

std::optional<int> rows_to_exceed(double per_factor, double level) {
  if (!(per_factor >= 0.0)) throw std::invalid_argument("rows_to_exceed: per_factor must be >= 0");
  if (per_factor > level) return 1;
  if (per_factor <= 1.0) return std::nullopt;
  const double estimate = std::floor(std::log(level) / std::log(per_factor));
  if (estimate > 1e9) return std::nullopt;
  auto n = std::max(1, static_cast<int>(estimate));
  while (n > 1 && std::pow(per_factor, n - 1) > level) --n;
  while (!(std::pow(per_factor, n) > level)) ++n;
  return n;
}

TensorEstimate estimate_tensor_product(std::span<const TensorFactor> factors, double p, double theta,
                                       const EstimatorConfig& cfg, Eigen::Index max_dim) {
  if (factors.empty()) throw std::invalid_argument("estimate_tensor_product: no factors");
  Eigen::Index total = 1;
  for (const auto& f : factors) total *= f.map.dim();
  if (total > max_dim) {
    throw std::invalid_argument("tensor product dimension " + std::to_string(total) + " exceeds cap " +
                                std::to_string(max_dim));
  }

  TensorEstimate out;
  std::vector<double> values;
  SuperOperator joint_map = factors[0].map;
  State joint_state = factors[0].state;
  CMatrix joint_witness;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const EmbeddedMap e = build_embedded(factors[k].map, factors[k].state, p, theta);
    NormEstimate est = estimate_norm(e.u_action, p, cfg);
    values.push_back(est.value);
    if (k == 0) {
      joint_witness = est.witness;
    } else {
      joint_map = kron_superop(joint_map, factors[k].map);
      joint_state = kron_state(joint_state, factors[k].state);
      joint_witness = kron(joint_witness, est.witness);
    }
    out.factors.push_back(std::move(est));
  }
  out.product = tensor_norm_lower_bound(values);

  EstimatorConfig joint_cfg = cfg;
  joint_cfg.seeds.push_back(joint_witness);
  const EmbeddedMap joint = build_embedded(joint_map, joint_state, p, theta);
  out.joint = estimate_norm(joint.u_action, p, joint_cfg);
  return out;
}

}  // namespace nclp
