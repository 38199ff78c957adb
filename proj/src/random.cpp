#include "nclp/random.hpp"

#include <cmath>
#include <numbers>

namespace nclp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL))) {}

std::uint64_t CounterRng::next_u64() { return splitmix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::uniform_open() {
  double u = 0.0;
  while (u == 0.0) u = uniform();
  return u;
}

// Box-Muller; std::normal_distribution is implementation-defined.
double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  const double phi = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Complex CounterRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, CounterRng& rng) {
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

CMatrix random_unitary(Eigen::Index n, CounterRng& rng) {
  const CMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

CMatrix random_density(Eigen::Index n, CounterRng& rng) {
  const CMatrix w = ginibre(n, n, rng);
  CMatrix rho = w * w.adjoint();
  rho /= rho.trace().real();
  return (rho + rho.adjoint()) / 2.0;
}

std::vector<CMatrix> random_kraus(Eigen::Index n, int count, CounterRng& rng) {
  std::vector<CMatrix> ks;
  ks.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) ks.push_back(ginibre(n, n, rng) / std::sqrt(static_cast<double>(n * count)));
  return ks;
}

std::vector<CMatrix> random_unital_kraus(Eigen::Index n, int count, CounterRng& rng) {
  std::vector<CMatrix> ks = random_kraus(n, count, rng);
  CMatrix s = CMatrix::Zero(n, n);
  for (const auto& k : ks) s += k * k.adjoint();
  const PositiveMatrix inv_sqrt = PositiveMatrix(s).power(-0.5);
  for (auto& k : ks) k = inv_sqrt.matrix() * k;
  return ks;
}

}  // namespace nclp
