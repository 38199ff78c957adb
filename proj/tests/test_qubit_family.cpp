#include <cmath>

#include "doctest.h"

#include "nclp/embed.hpp"
#include "nclp/qubit_family.hpp"
#include "nclp/random.hpp"

using namespace nclp;
using namespace nclp::qubit;

TEST_CASE("worked values") {
  CHECK(delta(0.6, 1.0, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
  const auto ab = optimal_ab(1.5, 2.0);
  CHECK(ab.a == doctest::Approx(0.8320502943).epsilon(1e-9));
  CHECK(ab.b == doctest::Approx(0.5547001962).epsilon(1e-9));
  CHECK(family_value(0.6, 1.0, 0.0, 1.0, 0.0) == doctest::Approx(1.2247448714).epsilon(1e-9));
  CHECK(m_closed(0.6, 1.0, 0.0) == doctest::Approx(1.2247448714).epsilon(1e-9));
  CHECK(m_closed(0.9, 1.0, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(alpha(1.5, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
  const auto th = theta_thresholds(1.25);
  CHECK(th.theta0 == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(th.theta1 == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(alpha1(0.0) == doctest::Approx(2.0));
}

TEST_CASE("optimal_ab maximizes the family objective") {
  CounterRng rng(31, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const double p = 1.05 + 2.0 * rng.uniform();
    const double d = 0.1 + 5.0 * rng.uniform();
    const auto best = optimal_ab(d, p);
    CHECK(std::pow(best.a, p) + std::pow(best.b, p) == doctest::Approx(1.0).epsilon(1e-12));
    auto objective = [&](double a, double b) { return std::pow(a + b / d, p) + std::pow(a * d + b, p); };
    const double top = objective(best.a, best.b);
    // oracle: brute force over the constraint curve
    for (int k = 0; k <= 400; ++k) {
      const double s = k / 400.0;
      CHECK(objective(std::pow(s, 1 / p), std::pow(1 - s, 1 / p)) <= top * (1 + 1e-12));
    }
  }
  CHECK_THROWS_AS(optimal_ab(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(optimal_ab(0.0, 1.5), std::invalid_argument);
}

TEST_CASE("m_closed agrees with family_value and the embedded map") {
  for (double c : {0.05, 0.3, 0.5, 0.77, 0.99})
    for (double p : {1.0, 1.2, 1.7, 2.0, 3.0})
      for (double theta : {0.0, 0.1, 0.5, 0.8, 1.0}) {
        const auto w = family_weights(c, p, theta);
        const double fv = family_value(c, p, theta, w.a, w.b);
        CHECK(m_closed(c, p, theta) == doctest::Approx(fv).epsilon(1e-12));
        const auto e = build_embedded(qubit_map(c), qubit_state(c), p, theta);
        CMatrix y = CMatrix::Zero(2, 2);
        y(0, 1) = w.a;
        y(1, 0) = w.b;
        CHECK(schatten_norm(e.u_action.apply(y), p) == doctest::Approx(fv).epsilon(1e-11));
      }
}

TEST_CASE("m_closed stays finite near the edges") {
  for (double p : {1.01, 1.5, 1.99}) {
    const double v = m_closed(1e-12, p, 0.0);
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
  }
}

TEST_CASE("baseline and symmetry") {
  CounterRng rng(32, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = 1.0 + 2.0 * rng.uniform();
    const double theta = rng.uniform();
    CHECK(m_closed(0.5, p, theta) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(m_closed(0.5, p, theta) - 1.0) <= 1e-14);
    const double c = 0.01 + 0.98 * rng.uniform();
    const double q = 1.0 + 1e-3 + 2.0 * rng.uniform();
    CHECK(m_closed(c, q, theta) == doctest::Approx(m_closed(1.0 - c, q, 1.0 - theta)).epsilon(1e-12));
  }
}

TEST_CASE("second-order Taylor coefficient") {
  CounterRng rng(33, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const double p = 1.05 + 0.9 * rng.uniform();
    const double theta = rng.uniform();
    const double h = 1e-3;
    auto f = [&](double t) { return std::pow(m_closed(0.5 + t, p, theta), p); };
    const double second = (f(h) - 2.0 * f(0.0) + f(-h)) / (2.0 * h * h);
    CHECK(second == doctest::Approx(alpha(p, theta)).epsilon(1e-4).scale(1.0));
    CHECK(alpha_factored(p, theta) == doctest::Approx(alpha(p, theta)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("first-order coefficient at p = 1") {
  for (double theta : {0.0, 0.2, 0.5, 0.9}) {
    const double h = 1e-5;
    const double slope = (m_closed(0.5 + h, 1.0, theta) - m_closed(0.5 - h, 1.0, theta)) / (2.0 * h);
    CHECK(slope == doctest::Approx(alpha1(theta)).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("sign of alpha follows the thresholds") {
  for (int i = 1; i < 10; ++i) {
    const double p = 1.0 + 0.1 * i;
    const auto th = theta_thresholds(p);
    for (int j = 0; j <= 100; ++j) {
      const double theta = 0.01 * j;
      const double a = alpha(p, theta);
      if (theta < th.theta0 - 1e-9 || theta > th.theta1 + 1e-9) CHECK(a > 0.0);
      if (theta > th.theta0 + 1e-9 && theta < th.theta1 - 1e-9) CHECK(a < 0.0);
    }
  }
  CHECK_THROWS_AS(theta_thresholds(0.5), std::invalid_argument);
  CHECK_THROWS_AS(theta_thresholds(2.5), std::invalid_argument);
}

TEST_CASE("find_counterexample") {
  const auto w = find_counterexample(1.1, 0.95, 1e-6);
  REQUIRE(w.has_value());
  CHECK(w->m_value > 1.0);
  CHECK(w->t == doctest::Approx(w->c - 0.5));
  CHECK(w->m_value == doctest::Approx(family_value(w->c, 1.1, 0.95, w->a, w->b)).epsilon(1e-14));
  CHECK(schatten_norm(witness_matrix(*w), 1.1) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_FALSE(find_counterexample(1.5, 0.5, 1e-6).has_value());
  CHECK_FALSE(find_counterexample(1.5, 0.4, 1e-6).has_value());

  const auto p1 = find_counterexample(1.0, 0.0, 1e-6);
  REQUIRE(p1.has_value());
  CHECK(p1->a == 1.0);
  CHECK(p1->b == 0.0);
  CHECK(p1->m_value == doctest::Approx(m_closed(p1->c, 1.0, 0.0)));

  CHECK_THROWS_AS(find_counterexample(1.5, 1.2, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(find_counterexample(1.5, 0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(qubit_state(0.0), std::invalid_argument);
  CHECK_THROWS_AS(qubit_map(1.0), std::invalid_argument);
}

TEST_CASE("family maximum beats the scan grid") {
  const double p = 1.3;
  const double theta = 0.05;
  const auto w = family_maximum(p, theta);
  for (int k = 1; k < 1000; ++k) {
    const double c = k / 1000.0;
    CHECK(m_closed(c, p, theta) <= w.m_value * (1 + 1e-12));
  }
}
