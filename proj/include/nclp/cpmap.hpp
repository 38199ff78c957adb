#pragma once

#include <functional>
#include <vector>

#include "nclp/matcore.hpp"

namespace nclp {

/// Faithful state on M_n given by its density matrix: positive definite, unit trace.
class State {
 public:
  explicit State(const CMatrix& gamma);
  static State diagonal(const RVector& weights);
  static State maximally_mixed(Eigen::Index n);

  Eigen::Index dim() const { return gamma_.dim(); }
  const PositiveMatrix& gamma() const { return gamma_; }
  const CMatrix& matrix() const { return gamma_.matrix(); }

  /// phi(X) = tr(Gamma X).
  Complex expectation(const CMatrix& x) const;

 private:
  PositiveMatrix gamma_;
};

/// Linear map M_n -> M_n stored as its n^2 x n^2 action matrix.
///
/// Vectorization is column stacking: vec(X)[i + j n] = X(i, j), and the action
/// matrix sends vec(X) to vec(T(X)). With this convention vec(A X B) = (B^T kron A) vec(X).
/// The Choi matrix is the block matrix whose (i, j) block is T(E_ij), i.e.
/// choi[(i n + a), (j n + b)] = T(E_ij)(a, b).
class SuperOperator {
 public:
  explicit SuperOperator(CMatrix action);

  static SuperOperator from_choi(const CMatrix& choi);
  /// Builds the action matrix by evaluating f on every matrix unit.
  static SuperOperator from_function(Eigen::Index n, const std::function<CMatrix(const CMatrix&)>& f);
  /// X -> sum_k K_k X K_k*.
  static SuperOperator from_kraus(const std::vector<CMatrix>& kraus);
  static SuperOperator identity(Eigen::Index n);
  static SuperOperator transpose(Eigen::Index n);

  Eigen::Index dim() const { return dim_; }
  const CMatrix& action() const { return action_; }

  CMatrix apply(const CMatrix& x) const;
  CMatrix choi() const;
  /// Hilbert-Schmidt adjoint: tr(adjoint(T)(Y)* X) = tr(Y* T(X)).
  SuperOperator adjoint() const;

  SuperOperator operator*(Complex scale) const { return SuperOperator(action_ * scale); }
  /// Composition: (this o other)(X) = this(other(X)).
  SuperOperator compose(const SuperOperator& other) const;

 private:
  Eigen::Index dim_;
  CMatrix action_;
};

inline CMatrix apply(const SuperOperator& t, const CMatrix& x) { return t.apply(x); }
inline CMatrix choi_matrix(const SuperOperator& t) { return t.choi(); }
inline SuperOperator adjoint(const SuperOperator& t) { return t.adjoint(); }

/// Choi test: lambda_min(choi) >= -tol * max(1, lambda_max(choi)). A Choi matrix
/// that is not Hermitian (relative asymmetry above tol) fails the test.
bool is_completely_positive(const SuperOperator& t, double tol = 1e-10);

struct CompatibilityReport {
  double c1 = 0.0;       ///< least C with phi o T <= C phi
  double c_inf = 0.0;    ///< ||T|| on M_n with the operator norm
  bool unital = false;
  bool completely_positive = false;
  /// Set when T fails the Choi test: c_inf is then sigma_max of the action matrix.
  bool c_inf_is_estimate = false;
};

/// Constants of T relative to the state. c1 = lambda_max(G^-1/2 T*(G) G^-1/2),
/// c_inf = ||T(I)||_inf for CP maps.
CompatibilityReport compatibility(const SuperOperator& t, const State& state);

}  // namespace nclp
