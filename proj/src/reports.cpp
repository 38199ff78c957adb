#include "nclp/reports.hpp"

#include <cmath>
#include <stdexcept>

#include "nclp/embed.hpp"
#include "nclp/qubit_family.hpp"
#include "nclp/tensor.hpp"

namespace nclp {

io::json norm_report(const SuperOperator& t, const State& state, double p, double theta, const EstimatorConfig& cfg) {
  const CompatibilityReport compat = compatibility(t, state);
  const EmbeddedMap e = build_embedded(t, state, p, theta);
  const NormEstimate est = estimate_norm(e.u_action, p, cfg);
  const RegionStatus region = classify_region(p, theta);

  io::json out{{"p", p},
               {"theta", theta},
               {"lower_bound", est.value},
               {"witness", io::matrix_to_json(est.witness)},
               {"c1", compat.c1},
               {"c_inf", compat.c_inf},
               {"c_inf_is_estimate", compat.c_inf_is_estimate},
               {"cp", compat.completely_positive},
               {"unital", compat.unital},
               {"converged", est.converged},
               {"iterations", est.iterations},
               {"restarts_used", est.restarts_used},
               {"region", {{"status", to_string(region.status)}, {"source", to_string(region.source)}}}};

  if (compat.completely_positive) {
    if (p >= 2.0) {
      out["upper_bound"] = hjx_upper_bound(compat, p);
      out["upper_bound_basis"] = to_string(RegionSource::LargeExponent);
    } else if (theta == 0.5) {
      out["upper_bound"] = hjx_upper_bound(compat, p);
      out["upper_bound_basis"] = to_string(RegionSource::SymmetricHalf);
    } else if (classify_region(p, theta).source == RegionSource::CentralInterval) {
      out["upper_bound_basis"] = to_string(RegionSource::CentralInterval);
    }
  }
  if (p == 2.0) out["exact_norm"] = exact_norm_p2(e);
  return out;
}

io::json counterexample_report(double p, double theta, double tol) {
  if (p >= 2.0) {
    throw std::invalid_argument("p >= 2 is in the bounded region (" +
                                std::string(to_string(RegionSource::LargeExponent)) +
                                "): no counterexample exists");
  }
  if (!(p >= 1.0)) throw std::invalid_argument("counterexample search needs 1 <= p < 2");
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must lie in [0, 1]");
  const auto w = qubit::find_counterexample(p, theta, tol);
  if (!w) return "none";

  io::json out{{"p", w->p},         {"theta", w->theta}, {"c", w->c},
               {"t", w->t},         {"a", w->a},         {"b", w->b},
               {"m_value", w->m_value}};
  const auto first = rows_to_exceed(w->m_value, kDivergenceLevel);
  out["divergence_rows_to_exceed_10"] = first ? io::json(*first) : io::json(nullptr);
  return out;
}

}  // namespace nclp
