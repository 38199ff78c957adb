#pragma once

#include <string_view>

#include "nclp/cpmap.hpp"

namespace nclp {

/// The map Y -> G^((1-theta)/p) T(G^(-(1-theta)/p) Y G^(-theta/p)) G^(theta/p) on S^p_n.
///
/// Its S^p -> S^p norm is the norm of the density-weighted extension of T to the
/// Haagerup L^p space of (M_n, phi). Only 1 <= p < inf is supported.
struct EmbeddedMap {
  SuperOperator base;
  State state;
  double p;
  double theta;
  SuperOperator u_action;
};

EmbeddedMap build_embedded(const SuperOperator& t, const State& state, double p, double theta);

/// Induced S^2 -> S^2 norm, i.e. the largest singular value of the action matrix.
double exact_norm_p2(const EmbeddedMap& e);

/// C_inf^(1 - 1/p) * C_1^(1/p) from the compatibility constants.
double hjx_upper_bound(const SuperOperator& t, const State& state, double p);
double hjx_upper_bound(const CompatibilityReport& report, double p);

enum class Region { Bounded, Unbounded, Unknown };

/// Which result settles a (p, theta) cell.
enum class RegionSource {
  LargeExponent,      ///< p >= 2, any theta (2-positive maps)
  CentralInterval,    ///< p < 2, 1 - p/2 <= theta <= p/2
  SymmetricHalf,      ///< theta = 1/2 (always bounded)
  QubitCounterexample,///< p < 2, theta outside [theta0, theta1]
  None
};

struct RegionStatus {
  Region status;
  RegionSource source;
  bool operator==(const RegionStatus&) const = default;
};

/// Boundary conventions: theta exactly on 1/2 (1 +- sqrt(p-1)) is Unknown, the
/// endpoints 1 - p/2 and p/2 are Bounded.
RegionStatus classify_region(double p, double theta);

/// Lower-case status names: "bounded", "unbounded", "unknown".
std::string_view to_string(Region r);
/// Wire tags: "Thm41", "Thm43", "HJXHalf", "Thm61", "None".
std::string_view to_string(RegionSource s);

}  // namespace nclp
