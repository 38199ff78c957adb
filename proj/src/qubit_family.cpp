#include "nclp/qubit_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace nclp::qubit {

namespace {

void require_weight(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("qubit family needs 0 < c < 1, got " + std::to_string(c));
}

void require_exponent(double p) {
  if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("qubit family needs 1 <= p < inf");
}

// log(1 + e^x) without overflow.
double softplus(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double log_delta(double c, double p, double theta) { return (2.0 * theta - 1.0) / p * std::log((1.0 - c) / c); }

template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = 1.0 / std::numbers::phi;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? x1 : x2;
}

}  // namespace

State qubit_state(double c) {
  require_weight(c);
  return State::diagonal(RVector{{1.0 - c, c}});
}

SuperOperator qubit_map(double c) {
  require_weight(c);
  const double s = std::sqrt(c * (1.0 - c));
  CMatrix choi = CMatrix::Zero(4, 4);
  choi(0, 0) = choi(1, 1) = 1.0 - c;
  choi(2, 2) = choi(3, 3) = c;
  choi(0, 3) = choi(3, 0) = choi(1, 2) = choi(2, 1) = s;
  return SuperOperator::from_choi(choi);
}

double delta(double c, double p, double theta) {
  require_weight(c);
  require_exponent(p);
  return std::pow((1.0 - c) / c, (2.0 * theta - 1.0) / p);
}

WeightPair optimal_ab(double delta, double p) {
  if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("optimal_ab needs 1 < p < inf; use (1, 0) at p = 1");
  if (!(delta > 0.0)) throw std::invalid_argument("optimal_ab needs delta > 0");
  const double q = p / (p - 1.0);
  const double s = q * std::log(delta);
  return {std::exp(-softplus(-s) / p), std::exp(-softplus(s) / p)};
}

WeightPair family_weights(double c, double p, double theta) {
  if (p == 1.0) return {1.0, 0.0};
  return optimal_ab(delta(c, p, theta), p);
}

double family_value(double c, double p, double theta, double a, double b) {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("family_value needs a, b >= 0");
  const double d = delta(c, p, theta);
  const double sum = std::pow(a + b / d, p) + std::pow(a * d + b, p);
  return std::sqrt(c * (1.0 - c)) * std::pow(sum, 1.0 / p);
}

double m_closed(double c, double p, double theta) {
  require_weight(c);
  require_exponent(p);
  if (p == 1.0) return std::sqrt(c * (1.0 - c)) * (1.0 + delta(c, p, theta));
  const double q = p / (p - 1.0);
  const double ld = log_delta(c, p, theta);
  const double log_m = 0.5 * p * std::log(c * (1.0 - c)) + softplus(-p * ld) + (p - 1.0) * softplus(q * ld);
  return std::exp(log_m / p);
}

double alpha(double p, double theta) {
  if (!(p > 1.0)) throw std::invalid_argument("alpha needs p > 1; use alpha1 at p = 1");
  const double q = p / (p - 1.0);
  const double lambda = 2.0 * theta - 1.0;
  return 2.0 * (lambda * lambda * q - p);
}

double alpha_factored(double p, double theta) {
  if (!(p > 1.0)) throw std::invalid_argument("alpha needs p > 1; use alpha1 at p = 1");
  const double q = p / (p - 1.0);
  const double root = std::sqrt(p - 1.0);
  const double theta0 = 0.5 * (1.0 - root);
  const double theta1 = 0.5 * (1.0 + root);
  return 8.0 * q * (theta - theta0) * (theta - theta1);
}

double alpha1(double theta) { return -2.0 * (2.0 * theta - 1.0); }

Thresholds theta_thresholds(double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("thresholds are defined for 1 <= p <= 2");
  const double root = std::sqrt(p - 1.0);
  return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

QubitWitness family_maximum(double p, double theta, const ScanConfig& scan) {
  require_exponent(p);
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must lie in [0, 1]");
  if (scan.points < 3 || !(scan.edge > 0.0 && scan.edge < 0.5) || !(scan.golden_tol > 0.0)) {
    throw std::invalid_argument("invalid scan configuration");
  }
  const double lo = -0.5 + scan.edge;
  const double hi = 0.5 - scan.edge;
  const double step = (hi - lo) / (scan.points - 1);
  auto objective = [&](double t) { return m_closed(0.5 + t, p, theta); };

  int best_k = 0;
  double best_value = objective(lo);
  for (int k = 1; k < scan.points; ++k) {
    const double v = objective(lo + k * step);
    if (v > best_value) {
      best_value = v;
      best_k = k;
    }
  }
  double best_t = lo + best_k * step;
  const double left = lo + std::max(best_k - 1, 0) * step;
  const double right = lo + std::min(best_k + 1, scan.points - 1) * step;
  const double refined = golden_section_max(objective, left, right, scan.golden_tol);
  if (objective(refined) > best_value) best_t = refined;

  const double c = 0.5 + best_t;
  const WeightPair w = family_weights(c, p, theta);
  return QubitWitness{c, best_t, w.a, w.b, family_value(c, p, theta, w.a, w.b), p, theta};
}

std::optional<QubitWitness> find_counterexample(double p, double theta, double tol, const ScanConfig& scan) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_counterexample needs tol > 0");
  QubitWitness w = family_maximum(p, theta, scan);
  if (w.m_value > 1.0 + tol) return w;
  return std::nullopt;
}

CMatrix witness_matrix(const QubitWitness& w) {
  CMatrix y = CMatrix::Zero(2, 2);
  y(0, 1) = w.a;
  y(1, 0) = w.b;
  return y;
}

}  // namespace nclp::qubit
