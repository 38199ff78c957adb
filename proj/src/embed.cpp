#include "nclp/embed.hpp"

#include <cmath>

namespace nclp {

namespace {
constexpr double kBoundarySlack = 1e-12;
}  // namespace

EmbeddedMap build_embedded(const SuperOperator& t, const State& state, double p, double theta) {
  if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("embedded map needs 1 <= p < inf");
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("embedded map needs theta in [0, 1]");
  if (t.dim() != state.dim()) throw std::invalid_argument("embedded map: map and state dimensions differ");

  const double left_exp = (1.0 - theta) / p;
  const double right_exp = theta / p;
  const PositiveMatrix& g = state.gamma();
  const CMatrix left = g.power(left_exp).matrix();
  const CMatrix left_inv = g.power(-left_exp).matrix();
  const CMatrix right = g.power(right_exp).matrix();
  const CMatrix right_inv = g.power(-right_exp).matrix();

  // vec(A X B) = (B^T kron A) vec(X)
  const CMatrix outer = kron(right.transpose(), left);
  const CMatrix inner = kron(right_inv.transpose(), left_inv);
  SuperOperator u(outer * t.action() * inner);
  return EmbeddedMap{t, state, p, theta, std::move(u)};
}

double exact_norm_p2(const EmbeddedMap& e) {
  if (e.p != 2.0) throw std::invalid_argument("exact_norm_p2 requires p = 2");
  return singular_values(e.u_action.action())(0);
}

double hjx_upper_bound(const CompatibilityReport& report, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("hjx_upper_bound needs p >= 1");
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return std::pow(report.c_inf, 1.0 - inv_p) * std::pow(report.c1, inv_p);
}

double hjx_upper_bound(const SuperOperator& t, const State& state, double p) {
  return hjx_upper_bound(compatibility(t, state), p);
}

RegionStatus classify_region(double p, double theta) {
  if (p >= 2.0) return {Region::Bounded, RegionSource::LargeExponent};
  // Invariant under theta -> 1 - theta. Decimal inputs such as (1.4, 0.3) sit on a
  // boundary only up to rounding, hence the slack.
  const double offset = std::abs(theta - 0.5);
  if (offset == 0.0) return {Region::Bounded, RegionSource::SymmetricHalf};
  if (offset <= (p - 1.0) / 2.0 + kBoundarySlack) return {Region::Bounded, RegionSource::CentralInterval};
  if (offset > 0.5 * std::sqrt(p - 1.0) + kBoundarySlack) {
    return {Region::Unbounded, RegionSource::QubitCounterexample};
  }
  return {Region::Unknown, RegionSource::None};
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Bounded: return "bounded";
    case Region::Unbounded: return "unbounded";
    case Region::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(RegionSource s) {
  switch (s) {
    case RegionSource::LargeExponent: return "Thm41";
    case RegionSource::CentralInterval: return "Thm43";
    case RegionSource::SymmetricHalf: return "HJXHalf";
    case RegionSource::QubitCounterexample: return "Thm61";
    case RegionSource::None: return "None";
  }
  return "None";
}

}  // namespace nclp
