#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace nclp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised when a negative power of a (numerically) singular matrix is requested.
class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Throws std::invalid_argument if the matrix is empty or has a NaN/Inf entry.
void require_valid(const CMatrix& x, const char* what = "matrix");

bool is_finite(const CMatrix& x);

/// Singular values in descending order.
RVector singular_values(const CMatrix& x);

/// Schatten p-norm, p in [1, inf]. Pass kInf for the operator norm.
double schatten_norm(const CMatrix& x, double p);

/// Real trace pairing <Z, X> = Re tr(Z* X).
double pairing(const CMatrix& z, const CMatrix& x);

/// Norming element of X in S^q, q = p/(p-1): ||Z||_q = 1 and <Z, X> = ||X||_p.
///
/// For p in (1, inf) this is U diag(sigma^(p-1)) V* / ||X||_p^(p-1). At p = 1 the
/// polar factor restricted to singular values above 1e-12 * sigma_max is used; at
/// p = inf the top singular pair u_1 v_1*. Both are fixed subgradient selections.
CMatrix dual_element(const CMatrix& x, double p);

/// Hermitian part (H + H*)/2 after checking asymmetry is below 1e-12 relative.
CMatrix hermitian_part(const CMatrix& h);

/// Max-entry asymmetry max|H - H*| relative to max|H|.
double relative_asymmetry(const CMatrix& h);

/// Eigenvalues of a Hermitian matrix, descending. The input is symmetrized first.
RVector hermitian_eigenvalues(const CMatrix& h);

/// Standard Kronecker product; row index of the result is i1 * r2 + i2.
CMatrix kron(const CMatrix& x, const CMatrix& y);

CMatrix identity(Eigen::Index n);

/// Matrix unit E_ij of size n.
CMatrix matrix_unit(Eigen::Index n, Eigen::Index i, Eigen::Index j);

/// Hermitian positive semidefinite matrix with a cached eigendecomposition.
class PositiveMatrix {
 public:
  /// Validates Hermiticity and positivity. Asymmetry up to 1e-12 relative is
  /// repaired by symmetrization; eigenvalues in [-1e-12 lambda_max, 0) are clipped.
  explicit PositiveMatrix(const CMatrix& h);

  static PositiveMatrix diagonal(const RVector& values);

  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }
  /// Eigenvalues, descending.
  const RVector& spectrum() const { return spectrum_; }
  /// Columns are eigenvectors matching spectrum().
  const CMatrix& frame() const { return frame_; }

  double max_eigenvalue() const { return spectrum_(0); }
  double min_eigenvalue() const { return spectrum_(spectrum_.size() - 1); }
  double trace() const { return spectrum_.sum(); }

  /// Strictly positive definite: lambda_min > 1e-12 * lambda_max.
  bool is_definite() const;

  /// P^s via the eigendecomposition. Negative s requires is_definite().
  PositiveMatrix power(double s) const;

 private:
  PositiveMatrix(CMatrix frame, RVector spectrum);

  CMatrix matrix_;
  RVector spectrum_;
  CMatrix frame_;
};

inline PositiveMatrix frac_power(const PositiveMatrix& p, double s) { return p.power(s); }

}  // namespace nclp
