#include "nclp/cpmap.hpp"

#include <algorithm>
#include <cmath>

namespace nclp {

namespace {

constexpr double kTraceTol = 1e-12;
constexpr double kUnitalTol = 1e-10;
constexpr double kCpTol = 1e-10;

Eigen::Index root_dim(Eigen::Index rows) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(rows))));
  if (n < 1 || n * n != rows) {
    throw std::invalid_argument("superoperator matrix size " + std::to_string(rows) + " is not a perfect square");
  }
  return n;
}

CMatrix unvec(const CVector& v, Eigen::Index n) { return Eigen::Map<const CMatrix>(v.data(), n, n); }

}  // namespace

State::State(const CMatrix& gamma) : gamma_(gamma) {
  const double tr = gamma_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw std::invalid_argument("state density must have unit trace, got " + std::to_string(tr));
  }
  if (!gamma_.is_definite()) {
    throw std::invalid_argument("state density is not faithful (lambda_min = " +
                                std::to_string(gamma_.min_eigenvalue()) + ")");
  }
}

State State::diagonal(const RVector& weights) {
  CMatrix d = CMatrix::Zero(weights.size(), weights.size());
  for (Eigen::Index i = 0; i < weights.size(); ++i) d(i, i) = weights(i);
  return State(d);
}

State State::maximally_mixed(Eigen::Index n) {
  return State(identity(n) / static_cast<double>(n));
}

Complex State::expectation(const CMatrix& x) const { return (matrix() * x).trace(); }

SuperOperator::SuperOperator(CMatrix action) : dim_(0), action_(std::move(action)) {
  require_valid(action_, "superoperator action matrix");
  if (action_.rows() != action_.cols()) throw std::invalid_argument("superoperator action matrix must be square");
  dim_ = root_dim(action_.rows());
}

SuperOperator SuperOperator::from_choi(const CMatrix& choi) {
  require_valid(choi, "Choi matrix");
  if (choi.rows() != choi.cols()) throw std::invalid_argument("Choi matrix must be square");
  const Eigen::Index n = root_dim(choi.rows());
  CMatrix action(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const CMatrix block = choi.block(i * n, j * n, n, n);
      action.col(i + j * n) = Eigen::Map<const CVector>(block.data(), n * n);
    }
  }
  return SuperOperator(std::move(action));
}

SuperOperator SuperOperator::from_function(Eigen::Index n, const std::function<CMatrix(const CMatrix&)>& f) {
  CMatrix action(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const CMatrix image = f(matrix_unit(n, i, j));
      if (image.rows() != n || image.cols() != n) throw std::invalid_argument("from_function: image has wrong shape");
      action.col(i + j * n) = Eigen::Map<const CVector>(image.data(), n * n);
    }
  }
  return SuperOperator(std::move(action));
}

SuperOperator SuperOperator::from_kraus(const std::vector<CMatrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("from_kraus: need at least one Kraus operator");
  const Eigen::Index n = kraus.front().rows();
  CMatrix action = CMatrix::Zero(n * n, n * n);
  for (const auto& k : kraus) {
    if (k.rows() != n || k.cols() != n) throw std::invalid_argument("from_kraus: Kraus operators must be n x n");
    action += kron(k.conjugate(), k);
  }
  return SuperOperator(std::move(action));
}

SuperOperator SuperOperator::identity(Eigen::Index n) { return SuperOperator(CMatrix::Identity(n * n, n * n)); }

SuperOperator SuperOperator::transpose(Eigen::Index n) {
  return from_function(n, [](const CMatrix& x) -> CMatrix { return x.transpose(); });
}

CMatrix SuperOperator::apply(const CMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) {
    throw std::invalid_argument("apply: expected " + std::to_string(dim_) + "x" + std::to_string(dim_) +
                                " input, got " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  const CVector out = action_ * Eigen::Map<const CVector>(x.data(), dim_ * dim_);
  return unvec(out, dim_);
}

CMatrix SuperOperator::choi() const {
  const Eigen::Index n = dim_;
  CMatrix c(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) c.block(i * n, j * n, n, n) = unvec(action_.col(i + j * n), n);
  return c;
}

SuperOperator SuperOperator::adjoint() const { return SuperOperator(action_.adjoint()); }

SuperOperator SuperOperator::compose(const SuperOperator& other) const {
  if (other.dim() != dim_) throw std::invalid_argument("compose: dimension mismatch");
  return SuperOperator(action_ * other.action_);
}

bool is_completely_positive(const SuperOperator& t, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_completely_positive: tol must be positive");
  const CMatrix c = t.choi();
  if (relative_asymmetry(c) > tol) return false;
  const RVector ev = hermitian_eigenvalues(c);
  return ev(ev.size() - 1) >= -tol * std::max(1.0, ev(0));
}

CompatibilityReport compatibility(const SuperOperator& t, const State& state) {
  if (t.dim() != state.dim()) throw std::invalid_argument("compatibility: map and state dimensions differ");
  CompatibilityReport r;
  r.completely_positive = is_completely_positive(t, kCpTol);

  const CMatrix pulled = t.adjoint().apply(state.matrix());
  const CMatrix inv_sqrt = state.gamma().power(-0.5).matrix();
  const RVector ev = hermitian_eigenvalues(inv_sqrt * pulled * inv_sqrt);
  r.c1 = std::max(ev(0), 0.0);

  const Eigen::Index n = t.dim();
  const CMatrix t_one = t.apply(identity(n));
  r.unital = schatten_norm(t_one - identity(n), kInf) <= kUnitalTol;
  if (r.completely_positive) {
    r.c_inf = schatten_norm(t_one, kInf);
  } else {
    r.c_inf = singular_values(t.action())(0);
    r.c_inf_is_estimate = true;
  }
  return r;
}

}  // namespace nclp
