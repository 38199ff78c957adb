#include "nclp/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace nclp {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kSpectralTol = 1e-12;
constexpr double kSupportTol = 1e-12;

void require_exponent(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw std::invalid_argument("Schatten exponent must satisfy p >= 1, got " + std::to_string(p));
  }
}

}  // namespace

bool is_finite(const CMatrix& x) {
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const Complex z = x.data()[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_valid(const CMatrix& x, const char* what) {
  if (x.rows() < 1 || x.cols() < 1) {
    throw std::invalid_argument(std::string(what) + " must have at least one row and column");
  }
  if (!is_finite(x)) {
    throw std::invalid_argument(std::string(what) + " has non-finite entries");
  }
}

RVector singular_values(const CMatrix& x) {
  require_valid(x);
  Eigen::JacobiSVD<CMatrix> svd(x);
  return svd.singularValues();
}

double schatten_norm(const CMatrix& x, double p) {
  require_exponent(p);
  const RVector s = singular_values(x);
  const double top = s(0);
  if (top == 0.0) return 0.0;
  if (std::isinf(p)) return top;
  // Scale by sigma_max so sigma^p cannot overflow or underflow.
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

double pairing(const CMatrix& z, const CMatrix& x) {
  if (z.rows() != x.rows() || z.cols() != x.cols()) {
    throw std::invalid_argument("pairing: shape mismatch");
  }
  return (z.conjugate().cwiseProduct(x)).sum().real();
}

CMatrix dual_element(const CMatrix& x, double p) {
  require_exponent(p);
  require_valid(x);
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();
  const CMatrix& u = svd.matrixU();
  const CMatrix& v = svd.matrixV();
  if (s(0) == 0.0) throw std::invalid_argument("dual_element: zero matrix has no norming element");

  if (std::isinf(p)) return u.col(0) * v.col(0).adjoint();

  RVector weights(s.size());
  if (p == 1.0) {
    for (Eigen::Index i = 0; i < s.size(); ++i) weights(i) = s(i) > kSupportTol * s(0) ? 1.0 : 0.0;
  } else {
    const double norm = schatten_norm(x, p);
    for (Eigen::Index i = 0; i < s.size(); ++i) weights(i) = std::pow(s(i) / norm, p - 1.0);
  }
  return u * weights.cast<Complex>().asDiagonal() * v.adjoint();
}

double relative_asymmetry(const CMatrix& h) {
  if (h.rows() != h.cols()) return kInf;
  const double scale = h.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff() / scale;
}

CMatrix hermitian_part(const CMatrix& h) {
  require_valid(h);
  if (h.rows() != h.cols()) throw std::invalid_argument("Hermitian matrix must be square");
  const double asym = relative_asymmetry(h);
  if (asym > kHermitianTol) {
    throw std::invalid_argument("matrix is not Hermitian (relative asymmetry " + std::to_string(asym) + ")");
  }
  return (h + h.adjoint()) / 2.0;
}

RVector hermitian_eigenvalues(const CMatrix& h) {
  require_valid(h);
  if (h.rows() != h.cols()) throw std::invalid_argument("Hermitian matrix must be square");
  const CMatrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().reverse();
}

CMatrix kron(const CMatrix& x, const CMatrix& y) {
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

CMatrix matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  CMatrix e = CMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

PositiveMatrix::PositiveMatrix(const CMatrix& h) : matrix_(hermitian_part(h)) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(matrix_);
  if (eig.info() != Eigen::Success) throw std::runtime_error("Hermitian eigendecomposition failed");
  const Eigen::Index n = matrix_.rows();
  spectrum_ = eig.eigenvalues().reverse();
  frame_ = eig.eigenvectors().rowwise().reverse();
  const double top = std::max(spectrum_(0), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (spectrum_(i) < -kSpectralTol * top || (top == 0.0 && spectrum_(i) < 0.0)) {
      throw std::invalid_argument("matrix is not positive semidefinite (eigenvalue " +
                                  std::to_string(spectrum_(i)) + ")");
    }
    if (spectrum_(i) < 0.0) spectrum_(i) = 0.0;
  }
}

PositiveMatrix::PositiveMatrix(CMatrix frame, RVector spectrum) {
  const Eigen::Index n = spectrum.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return spectrum(a) > spectrum(b); });
  spectrum_.resize(n);
  frame_.resize(frame.rows(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    spectrum_(k) = spectrum(order[static_cast<std::size_t>(k)]);
    frame_.col(k) = frame.col(order[static_cast<std::size_t>(k)]);
  }
  const CMatrix m = frame_ * spectrum_.cast<Complex>().asDiagonal() * frame_.adjoint();
  matrix_ = (m + m.adjoint()) / 2.0;
}

PositiveMatrix PositiveMatrix::diagonal(const RVector& values) {
  CMatrix d = CMatrix::Zero(values.size(), values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) d(i, i) = values(i);
  return PositiveMatrix(d);
}

bool PositiveMatrix::is_definite() const {
  return min_eigenvalue() > kSpectralTol * max_eigenvalue() && max_eigenvalue() > 0.0;
}

PositiveMatrix PositiveMatrix::power(double s) const {
  if (!std::isfinite(s)) throw std::invalid_argument("power exponent must be finite");
  const Eigen::Index n = dim();
  if (s == 0.0) return PositiveMatrix(identity(n), RVector::Ones(n));
  if (s < 0.0 && !is_definite()) {
    throw SingularMatrixError("negative power of a singular positive matrix (lambda_min = " +
                              std::to_string(min_eigenvalue()) + ")");
  }
  RVector powered(n);
  for (Eigen::Index i = 0; i < n; ++i) powered(i) = std::pow(spectrum_(i), s);
  return PositiveMatrix(frame_, powered);
}

}  // namespace nclp
