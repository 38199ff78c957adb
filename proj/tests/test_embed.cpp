#include <cmath>

#include "doctest.h"

#include "nclp/embed.hpp"
#include "nclp/qubit_family.hpp"
#include "nclp/random.hpp"

using namespace nclp;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Independent evaluation of U_{p,theta}(Y) through explicit diagonal powers.
CMatrix direct_embedded(const SuperOperator& t, const RVector& g, double p, double theta, const CMatrix& y) {
  const Eigen::Index n = g.size();
  auto dpow = [&](double s) {
    CMatrix d = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = std::pow(g(i), s);
    return d;
  };
  const double l = (1 - theta) / p;
  const double r = theta / p;
  return dpow(l) * t.apply(dpow(-l) * y * dpow(-r)) * dpow(r);
}

}  // namespace

TEST_CASE("embedded action matches a direct evaluation") {
  CounterRng rng(11, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const SuperOperator t = SuperOperator::from_kraus(random_kraus(n, 2, rng));
    RVector g(n);
    for (Eigen::Index i = 0; i < n; ++i) g(i) = 0.1 + rng.uniform();
    g /= g.sum();
    const double p = 1.0 + 3.0 * rng.uniform();
    const double theta = rng.uniform();
    const auto e = build_embedded(t, State::diagonal(g), p, theta);
    const CMatrix y = ginibre(n, n, rng);
    CHECK(max_abs(e.u_action.apply(y) - direct_embedded(t, g, p, theta, y)) < 1e-11);
  }
}

TEST_CASE("identity map embeds to the identity") {
  const State st = State::diagonal(RVector{{0.2, 0.3, 0.5}});
  for (double p : {1.0, 1.5, 2.0, 4.0})
    for (double theta : {0.0, 0.3, 1.0}) {
      const auto e = build_embedded(SuperOperator::identity(3), st, p, theta);
      CHECK(max_abs(e.u_action.action() - CMatrix::Identity(9, 9)) < 1e-13);
    }
}

TEST_CASE("qubit family closed form on anti-diagonal inputs") {
  for (double c : {0.2, 0.6, 0.85})
    for (double p : {1.0, 1.3, 1.8})
      for (double theta : {0.0, 0.25, 0.9}) {
        const auto e = build_embedded(qubit::qubit_map(c), qubit::qubit_state(c), p, theta);
        const double a = std::pow(0.4, 1.0 / p);
        const double b = std::pow(0.6, 1.0 / p);
        CMatrix y = CMatrix::Zero(2, 2);
        y(0, 1) = a;
        y(1, 0) = b;
        CHECK(schatten_norm(e.u_action.apply(y), p) ==
              doctest::Approx(qubit::family_value(c, p, theta, a, b)).epsilon(1e-12));
      }
}

TEST_CASE("exact_norm_p2") {
  for (double c : {0.1, 0.4, 0.7})
    for (double theta : {0.0, 0.5, 1.0}) {
      const auto e = build_embedded(qubit::qubit_map(c), qubit::qubit_state(c), 2.0, theta);
      CHECK(exact_norm_p2(e) == doctest::Approx(1.0).epsilon(1e-12));
    }
  const auto e = build_embedded(SuperOperator::identity(2), State::maximally_mixed(2), 1.5, 0.0);
  CHECK_THROWS_AS(exact_norm_p2(e), std::invalid_argument);
}

TEST_CASE("build_embedded rejects bad parameters") {
  const auto t = SuperOperator::identity(2);
  const auto st = State::maximally_mixed(2);
  CHECK_THROWS_AS(build_embedded(t, st, 0.9, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_embedded(t, st, kInf, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_embedded(t, st, std::nan(""), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_embedded(t, st, 1.5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(build_embedded(t, st, 1.5, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(build_embedded(SuperOperator::identity(3), st, 1.5, 0.5), std::invalid_argument);
}

TEST_CASE("hjx_upper_bound") {
  const State st = State::diagonal(RVector{{0.2, 0.3, 0.5}});
  const auto twice = SuperOperator::identity(3) * Complex(2.0, 0.0);
  for (double p : {1.0, 2.0, 3.0}) CHECK(hjx_upper_bound(twice, st, p) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(hjx_upper_bound(qubit::qubit_map(0.3), qubit::qubit_state(0.3), 2.5) == doctest::Approx(1.0).epsilon(1e-12));

  CompatibilityReport r;
  r.c1 = 4.0;
  r.c_inf = 1.0;
  CHECK(hjx_upper_bound(r, 2.0) == doctest::Approx(2.0));
  CHECK(hjx_upper_bound(r, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("classify_region examples") {
  CHECK(classify_region(3.0, 0.9) == RegionStatus{Region::Bounded, RegionSource::LargeExponent});
  CHECK(classify_region(2.0, 0.0) == RegionStatus{Region::Bounded, RegionSource::LargeExponent});
  CHECK(classify_region(1.5, 0.4) == RegionStatus{Region::Bounded, RegionSource::CentralInterval});
  CHECK(classify_region(1.5, 0.25) == RegionStatus{Region::Bounded, RegionSource::CentralInterval});
  CHECK(classify_region(1.5, 0.1) == RegionStatus{Region::Unbounded, RegionSource::QubitCounterexample});
  CHECK(classify_region(1.5, 0.2) == RegionStatus{Region::Unknown, RegionSource::None});
  CHECK(classify_region(1.0, 0.5) == RegionStatus{Region::Bounded, RegionSource::SymmetricHalf});
  CHECK(classify_region(1.0, 0.51) == RegionStatus{Region::Unbounded, RegionSource::QubitCounterexample});
  const double edge = 0.5 * (1.0 - std::sqrt(0.5));
  CHECK(classify_region(1.5, edge).status == Region::Unknown);
}

TEST_CASE("classify_region is symmetric in theta") {
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double p = 1.0 + 0.1 * i;
      const double theta = 0.01 * j;
      CHECK(classify_region(p, theta) == classify_region(p, 1.0 - theta));
    }
}

TEST_CASE("wire names") {
  CHECK(to_string(RegionSource::LargeExponent) == "Thm41");
  CHECK(to_string(RegionSource::CentralInterval) == "Thm43");
  CHECK(to_string(RegionSource::SymmetricHalf) == "HJXHalf");
  CHECK(to_string(RegionSource::QubitCounterexample) == "Thm61");
  CHECK(to_string(RegionSource::None) == "None");
  CHECK(to_string(Region::Bounded) == "bounded");
  CHECK(to_string(Region::Unbounded) == "unbounded");
  CHECK(to_string(Region::Unknown) == "unknown");
}
