#include "nclp/normest.hpp"

#include <cmath>
#include <exception>

#include "nclp/parallel.hpp"

namespace nclp {

namespace {

constexpr int kAntiDiagonalProbes = 64;
constexpr int kExtrapolationPeriod = 8;
constexpr double kMaxExtrapolation = 4096.0;

double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  return p / (p - 1.0);
}

CMatrix normalized(const CMatrix& y, double p) {
  const double norm = schatten_norm(y, p);
  if (norm == 0.0) throw std::invalid_argument("starting witness must be nonzero");
  return y / norm;
}

std::vector<CMatrix> probe_set(Eigen::Index n, double p) {
  std::vector<CMatrix> probes;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) probes.push_back(matrix_unit(n, i, j));
  if (n == 2) {
    for (int k = 1; k < kAntiDiagonalProbes; ++k) {
      const double share = static_cast<double>(k) / kAntiDiagonalProbes;
      CMatrix y = CMatrix::Zero(2, 2);
      y(0, 1) = std::pow(share, 1.0 / p);
      y(1, 0) = std::pow(1.0 - share, 1.0 / p);
      probes.push_back(y);
    }
  }
  return probes;
}

// Start k: random restarts first, then the configured seeds.
CMatrix start_for(std::size_t k, Eigen::Index n, const EstimatorConfig& cfg) {
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  if (k < restarts) {
    CounterRng rng(cfg.seed, k);
    return ginibre(n, n, rng);
  }
  return cfg.seeds[k - restarts];
}

NormEstimate merge(const SuperOperator& u, double p, std::vector<AscentResult>& runs, const EstimatorConfig& cfg) {
  const Eigen::Index n = u.dim();

  // Probe evaluations are cheap; the best one gets its own ascent.
  double best_probe_value = -1.0;
  CMatrix best_probe;
  for (const auto& probe : probe_set(n, p)) {
    const double v = norm_ratio(u, probe, p);
    if (v > best_probe_value) {
      best_probe_value = v;
      best_probe = probe;
    }
  }
  AscentResult probe_run = ascend(u, p, best_probe, cfg.max_iters, cfg.rel_tol);

  NormEstimate best;
  best.value = -1.0;
  best.restarts_used = static_cast<int>(runs.size()) + 1;
  auto consider = [&](AscentResult& r) {
    if (r.value > best.value) {
      best.value = r.value;
      best.witness = std::move(r.witness);
      best.iterations = r.iterations;
      best.converged = r.converged;
    }
  };
  for (auto& r : runs) consider(r);
  consider(probe_run);
  return best;
}

}  // namespace

void EstimatorConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("EstimatorConfig: restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("EstimatorConfig: max_iters must be >= 1");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("EstimatorConfig: rel_tol must be > 0");
}

double norm_ratio(const SuperOperator& u, const CMatrix& y, double p) {
  return schatten_norm(u.apply(y), p) / schatten_norm(y, p);
}

AscentResult ascend(const SuperOperator& u, double p, const CMatrix& start, int max_iters, double rel_tol,
                    bool record_history) {
  if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("ascend needs 1 <= p < inf");
  const double q = conjugate_exponent(p);
  const SuperOperator u_adj = u.adjoint();

  AscentResult r;
  r.witness = normalized(start, p);
  CMatrix image = u.apply(r.witness);
  r.value = schatten_norm(image, p);
  if (record_history) r.history.push_back(r.value);

  for (int it = 0; it < max_iters; ++it) {
    if (r.value == 0.0) {
      r.converged = true;
      break;
    }
    const CMatrix z = dual_element(image, p);
    const CMatrix next = normalized(dual_element(u_adj.apply(z), q), p);
    CMatrix next_image = u.apply(next);
    const double next_value = schatten_norm(next_image, p);
    r.iterations = it + 1;
    if (next_value <= r.value) {
      r.converged = true;
      break;
    }
    const double before = r.value;
    const CMatrix prev = std::move(r.witness);
    r.witness = next;
    image = std::move(next_image);
    r.value = next_value;
    if (record_history) r.history.push_back(r.value);

    bool small_gain = r.value <= before * (1.0 + rel_tol);
    if (small_gain || (it + 1) % kExtrapolationPeriod == 0) {
      // Overrelaxation along the last step, doubling while it keeps improving.
      const CMatrix step = r.witness - prev;
      for (double s = 1.0; s <= kMaxExtrapolation; s *= 2.0) {
        const CMatrix cand = r.witness + s * step;
        const double norm = schatten_norm(cand, p);
        if (norm == 0.0) break;
        CMatrix cand_image = u.apply(cand / norm);
        const double v = schatten_norm(cand_image, p);
        if (!(v > r.value)) break;
        r.witness = cand / norm;
        image = std::move(cand_image);
        r.value = v;
      }
      if (r.value > next_value && record_history) r.history.push_back(r.value);
      small_gain = r.value <= before * (1.0 + rel_tol);
    }
    if (small_gain) {
      r.converged = true;
      break;
    }
  }
  return r;
}

NormEstimate estimate_norm(const SuperOperator& u, double p, const EstimatorConfig& cfg) {
  cfg.validate();
  if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("estimate_norm needs 1 <= p < inf");
  const Eigen::Index n = u.dim();
  const std::size_t total = static_cast<std::size_t>(cfg.restarts) + cfg.seeds.size();
  std::vector<AscentResult> runs(total);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(cfg.threads))
  for (std::size_t k = 0; k < total; ++k) {
    try {
      runs[k] = ascend(u, p, start_for(k, n, cfg), cfg.max_iters, cfg.rel_tol);
    } catch (...) {
#pragma omp critical(nclp_normest_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return merge(u, p, runs, cfg);
}

NormEstimate estimate_norm_serial(const SuperOperator& u, double p, const EstimatorConfig& cfg) {
  cfg.validate();
  if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("estimate_norm needs 1 <= p < inf");
  const Eigen::Index n = u.dim();
  const std::size_t total = static_cast<std::size_t>(cfg.restarts) + cfg.seeds.size();
  std::vector<AscentResult> runs(total);
  for (std::size_t k = 0; k < total; ++k) runs[k] = ascend(u, p, start_for(k, n, cfg), cfg.max_iters, cfg.rel_tol);
  return merge(u, p, runs, cfg);
}

CMatrix schatten_gradient(const CMatrix& y, double p) {
  if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("schatten_gradient needs 1 < p < inf");
  return dual_element(y, p);
}

}  // namespace nclp
