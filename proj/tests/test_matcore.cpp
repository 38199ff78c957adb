#include <cmath>

#include "doctest.h"

#include "nclp/matcore.hpp"
#include "nclp/random.hpp"

using namespace nclp;

namespace {

CMatrix diag(std::initializer_list<double> values) {
  CMatrix d = CMatrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) {
    d(i, i) = v;
    ++i;
  }
  return d;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("schatten_norm on diagonal and anti-diagonal matrices") {
  CHECK(schatten_norm(diag({3, 4}), 1.0) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(schatten_norm(diag({3, 4}), 2.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(schatten_norm(diag({3, 4}), kInf) == doctest::Approx(4.0).epsilon(1e-15));

  for (double p : {1.0, 1.3, 2.0, 3.7}) {
    CMatrix y = CMatrix::Zero(2, 2);
    y(0, 1) = 0.7;
    y(1, 0) = 0.2;
    CHECK(schatten_norm(y, p) == doctest::Approx(std::pow(std::pow(0.7, p) + std::pow(0.2, p), 1.0 / p)).epsilon(1e-14));
  }
  CHECK(schatten_norm(CMatrix::Zero(3, 3), 1.5) == 0.0);
}

TEST_CASE("schatten_norm rejects bad exponents and entries") {
  CHECK_THROWS_AS(schatten_norm(diag({1, 2}), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(schatten_norm(diag({1, 2}), std::nan("")), std::invalid_argument);
  CMatrix bad = diag({1, 2});
  bad(0, 1) = std::nan("");
  CHECK_THROWS_AS(schatten_norm(bad, 2.0), std::invalid_argument);
  bad(0, 1) = kInf;
  CHECK_THROWS_AS(schatten_norm(bad, 2.0), std::invalid_argument);
}

TEST_CASE("dual_element examples") {
  SUBCASE("p = 2 is X / ||X||_2") {
    CHECK(max_abs(dual_element(diag({3, 4}), 2.0) - diag({0.6, 0.8})) < 1e-15);
  }
  SUBCASE("unitary input") {
    CounterRng rng(1, 0);
    const CMatrix u = random_unitary(3, rng);
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      const double q = p == 1.0 ? kInf : p / (p - 1.0);
      const double scale = std::isinf(q) ? 1.0 : std::pow(3.0, 1.0 / q);
      CHECK(max_abs(dual_element(u, p) - u / scale) < 1e-12);
    }
  }
  SUBCASE("diag(1, 2) at p = 3") {
    const CMatrix x = diag({1, 2});
    const CMatrix z = dual_element(x, 3.0);
    // oracle: pairing equals ||X||_3 and ||Z||_{3/2} = 1
    CHECK(pairing(z, x) == doctest::Approx(std::cbrt(9.0)).epsilon(1e-14));
    CHECK(schatten_norm(z, 1.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(z(0, 0).real() == doctest::Approx(0.2311204247835).epsilon(1e-12));
    CHECK(z(1, 1).real() == doctest::Approx(0.9244816991341).epsilon(1e-12));
  }
  SUBCASE("p = 1 uses the polar factor on the support") {
    CMatrix x = CMatrix::Zero(3, 3);
    x(0, 0) = 2.0;
    x(1, 2) = Complex(0.0, 5.0);
    CMatrix want = CMatrix::Zero(3, 3);
    want(0, 0) = 1.0;
    want(1, 2) = Complex(0.0, 1.0);
    CHECK(max_abs(dual_element(x, 1.0) - want) < 1e-14);
  }
  SUBCASE("p = inf uses the top singular pair") {
    const CMatrix z = dual_element(diag({1, 3}), kInf);
    CHECK(max_abs(z.cwiseAbs() - diag({0, 1}).cwiseAbs()) < 1e-15);
    CHECK(pairing(z, diag({1, 3})) == doctest::Approx(3.0));
  }
  CHECK_THROWS_AS(dual_element(CMatrix::Zero(2, 2), 2.0), std::invalid_argument);
}

TEST_CASE("frac_power examples") {
  const PositiveMatrix p = PositiveMatrix::diagonal(RVector{{0.36, 0.64}});
  CHECK(max_abs(frac_power(p, 0.5).matrix() - diag({0.6, 0.8})) < 1e-15);
  CHECK(max_abs(frac_power(p, 0.0).matrix() - CMatrix::Identity(2, 2)) == 0.0);
  const PositiveMatrix g = PositiveMatrix::diagonal(RVector{{0.4, 0.6}});
  CHECK(max_abs(frac_power(g, -1.0).matrix() - diag({2.5, 5.0 / 3.0})) < 1e-14);

  const PositiveMatrix singular = PositiveMatrix::diagonal(RVector{{1.0, 0.0}});
  CHECK_THROWS_AS(frac_power(singular, -0.5), SingularMatrixError);
  CHECK(max_abs(frac_power(singular, 0.5).matrix() - diag({1, 0})) < 1e-15);
}

TEST_CASE("PositiveMatrix validation") {
  CMatrix h(2, 2);
  h << 2.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 2.0;
  const PositiveMatrix ok(h);
  CHECK(ok.spectrum()(0) == doctest::Approx(3.0));
  CHECK(ok.spectrum()(1) == doctest::Approx(1.0));
  const CMatrix rebuilt = ok.frame() * ok.spectrum().cast<Complex>().asDiagonal() * ok.frame().adjoint();
  CHECK((rebuilt - h).norm() / h.norm() < 1e-10);

  CMatrix nearly = h;
  nearly(0, 1) += 1e-14;
  CHECK_NOTHROW(PositiveMatrix{nearly});
  CMatrix skew = h;
  skew(0, 1) += 1e-6;
  CHECK_THROWS_AS(PositiveMatrix{skew}, std::invalid_argument);

  CHECK_THROWS_AS(PositiveMatrix{diag({1.0, -0.1})}, std::invalid_argument);
  const PositiveMatrix clipped{diag({1.0, -1e-14})};
  CHECK(clipped.min_eigenvalue() == 0.0);
  CHECK_THROWS_AS(PositiveMatrix{CMatrix::Zero(2, 3)}, std::invalid_argument);
}

TEST_CASE("kron examples") {
  CounterRng rng(2, 0);
  const CMatrix x = ginibre(3, 2, rng);
  CHECK(max_abs(kron(x, CMatrix::Identity(1, 1)) - x) == 0.0);
  CHECK(max_abs(kron(diag({1, 2}), diag({3, 4})) - diag({3, 4, 6, 8})) == 0.0);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = ginibre(2, 2, rng);
    const CMatrix b = ginibre(2, 2, rng);
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf})
      CHECK(schatten_norm(kron(a, b), p) ==
            doctest::Approx(schatten_norm(a, p) * schatten_norm(b, p)).epsilon(1e-12));
  }
}

TEST_CASE("matcore properties on random instances") {
  CounterRng rng(3, 0);
  const double exps[] = {1.0, 1.25, 2.0, 3.5, kInf};
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    const CMatrix x = ginibre(n, n, rng);
    const CMatrix y = ginibre(n, n, rng);
    const CMatrix u = random_unitary(n, rng);
    const CMatrix v = random_unitary(n, rng);
    for (double p : exps) {
      const double base = schatten_norm(x, p);
      CHECK(std::abs(schatten_norm(u * x * v, p) - base) <= 1e-10 * base);
    }
    for (std::size_t i = 0; i + 1 < std::size(exps); ++i)
      CHECK(schatten_norm(x, exps[i]) >= schatten_norm(x, exps[i + 1]) - 1e-12);

    const double p = 2.0 + 4.0 * rng.uniform();
    const double q = 2.0 + 4.0 * rng.uniform();
    const double r = 1.0 / (1.0 / p + 1.0 / q);
    CHECK(schatten_norm(x * y, r) <= schatten_norm(x, p) * schatten_norm(y, q) + 1e-10);

    const double pd = 1.0 + 4.0 * rng.uniform();
    const CMatrix z = dual_element(x, pd);
    CHECK(std::abs(pairing(z, x) - schatten_norm(x, pd)) <= 1e-10 * schatten_norm(x, pd));
    CHECK(std::abs(schatten_norm(z, pd / (pd - 1.0)) - 1.0) <= 1e-10);

    CMatrix g = x * x.adjoint() + 0.5 * CMatrix::Identity(n, n);
    const PositiveMatrix pm(g);
    const double s = -2.0 + 4.0 * rng.uniform();
    const double t = -2.0 + 4.0 * rng.uniform();
    const CMatrix lhs = pm.power(s).power(t).matrix();
    const CMatrix rhs = pm.power(s * t).matrix();
    CHECK((lhs - rhs).norm() <= 1e-10 * rhs.norm());
  }
}

TEST_CASE("hermitian_eigenvalues are descending") {
  const RVector ev = hermitian_eigenvalues(diag({0.5, 3.0, -1.0}));
  CHECK(ev(0) == doctest::Approx(3.0));
  CHECK(ev(1) == doctest::Approx(0.5));
  CHECK(ev(2) == doctest::Approx(-1.0));
}
