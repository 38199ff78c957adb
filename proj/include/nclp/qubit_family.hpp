#pragma once

#include <optional>

#include "nclp/cpmap.hpp"

namespace nclp::qubit {

/// Gamma_c = diag(1 - c, c), 0 < c < 1.
State qubit_state(double c);

/// The unital CP map with T(E11) = (1-c) I, T(E22) = c I and
/// T(E12) = T(E21) = sqrt(c(1-c)) (E12 + E21). It preserves the state of qubit_state(c).
SuperOperator qubit_map(double c);

/// delta = ((1-c)/c)^((2 theta - 1)/p).
double delta(double c, double p, double theta);

struct WeightPair {
  double a;
  double b;
};

/// Maximizer of (a + b/delta)^p + (a delta + b)^p subject to a^p + b^p = 1, p > 1:
/// a = (d^q / (1 + d^q))^(1/p), b = (1 / (1 + d^q))^(1/p).
WeightPair optimal_ab(double delta, double p);

/// (a, b) used by the family at exponent p: optimal_ab for p > 1, (1, 0) at p = 1.
WeightPair family_weights(double c, double p, double theta);

/// ||U_{p,theta}(Y)||_p for Y = [[0, a], [b, 0]] (norm scale, i.e. the p-th root of
/// (c(1-c))^(p/2) ((a + b/delta)^p + (a delta + b)^p)). Requires a, b >= 0.
double family_value(double c, double p, double theta, double a, double b);

/// Family value at family_weights(c, p, theta), in norm scale. For p > 1 this is
/// (gamma (1 + delta^-p)(delta^q + 1)^(p-1))^(1/p), gamma = (c(1-c))^(p/2); at p = 1
/// it is sqrt(c(1-c)) (1 + delta).
double m_closed(double c, double p, double theta);

/// Second-order coefficient of t -> m_closed(1/2 + t, p, theta)^p at t = 0:
/// 2((2 theta - 1)^2 q - p), p > 1.
double alpha(double p, double theta);
/// Same coefficient through the factorization 8 q (theta - theta0)(theta - theta1).
double alpha_factored(double p, double theta);
/// First-order coefficient at p = 1: -2(2 theta - 1).
double alpha1(double theta);

struct Thresholds {
  double theta0;
  double theta1;
};

/// theta0,1 = (1 -+ sqrt(p - 1)) / 2 for 1 <= p <= 2.
Thresholds theta_thresholds(double p);

struct QubitWitness {
  double c;
  double t;        ///< c - 1/2
  double a;
  double b;
  double m_value;  ///< family_value(c, p, theta, a, b)
  double p;
  double theta;
};

struct ScanConfig {
  int points = 1000;
  double edge = 1e-3;          ///< t ranges over [-1/2 + edge, 1/2 - edge]
  double golden_tol = 1e-12;   ///< refinement tolerance in t
};

/// Maximizes m_closed over t by a coarse scan and golden-section refinement.
/// Always returns the best point found, whether or not it exceeds 1.
QubitWitness family_maximum(double p, double theta, const ScanConfig& scan = {});

/// family_maximum when its value exceeds 1 + tol, otherwise nothing.
std::optional<QubitWitness> find_counterexample(double p, double theta, double tol, const ScanConfig& scan = {});

/// Y = [[0, a], [b, 0]] of a witness.
CMatrix witness_matrix(const QubitWitness& w);

}  // namespace nclp::qubit
