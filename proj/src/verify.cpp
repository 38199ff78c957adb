#include "nclp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nclp/cpmap.hpp"
#include "nclp/embed.hpp"
#include "nclp/normest.hpp"
#include "nclp/phase_diagram.hpp"
#include "nclp/qubit_family.hpp"
#include "nclp/tensor.hpp"

namespace nclp {

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double uniform(CounterRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

// Well-conditioned faithful state: half a random density, half the trace state.
State mixed_state(Eigen::Index n, CounterRng& rng) {
  CMatrix g = 0.5 * random_density(n, rng) + 0.5 * identity(n) / static_cast<double>(n);
  g /= g.trace().real();
  return State((g + g.adjoint()) / 2.0);
}

SuperOperator random_cp(Eigen::Index n, CounterRng& rng) {
  return SuperOperator::from_kraus(random_kraus(n, 1 + static_cast<int>(rng.next_u64() % 3), rng));
}

EstimatorConfig quick_config(std::uint64_t seed) {
  EstimatorConfig cfg;
  cfg.restarts = 8;
  cfg.max_iters = 300;
  cfg.seed = seed;
  return cfg;
}

class Suite {
 public:
  explicit Suite(std::uint64_t seed) { report_.seed = seed; }

  /// `body` returns the worst violation; the check passes when worst <= tol.
  void run(const std::string& name, double tol, const std::function<double(CounterRng&)>& body) {
    CounterRng rng(report_.seed, 1000 + report_.checks.size());
    CheckResult r;
    r.name = name;
    r.tolerance = tol;
    try {
      r.worst = body(rng);
      r.passed = r.worst <= tol;
      if (!r.passed) r.detail = "worst violation exceeds tolerance";
    } catch (const std::exception& e) {
      r.worst = kInf;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  VerifyReport take() { return std::move(report_); }
  std::uint64_t seed() const { return report_.seed; }

 private:
  VerifyReport report_;
};

void matcore_checks(Suite& s) {
  const double exps[] = {1.0, 1.5, 2.0, 3.0, kInf};

  s.run("unitary_invariance", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Index n = 2 + trial % 3;
      const CMatrix x = ginibre(n, n, rng);
      const CMatrix u = random_unitary(n, rng);
      const CMatrix v = random_unitary(n, rng);
      for (double p : exps) worst = std::max(worst, rel_err(schatten_norm(u * x * v, p), schatten_norm(x, p)));
    }
    return worst;
  });

  s.run("holder", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Index n = 2 + trial % 3;
      const CMatrix x = ginibre(n, n, rng);
      const CMatrix y = ginibre(n, n, rng);
      const double p = uniform(rng, 2.0, 6.0);
      const double q = uniform(rng, 2.0, 6.0);
      const double r = 1.0 / (1.0 / p + 1.0 / q);
      worst = std::max(worst, schatten_norm(x * y, r) - schatten_norm(x, p) * schatten_norm(y, q));
    }
    return worst;
  });

  s.run("monotonicity", 1e-12, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const CMatrix x = ginibre(3, 3, rng);
      for (std::size_t i = 0; i + 1 < std::size(exps); ++i)
        worst = std::max(worst, schatten_norm(x, exps[i + 1]) - schatten_norm(x, exps[i]));
    }
    return worst;
  });

  s.run("frac_power_homomorphism", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const State st = mixed_state(2 + trial % 3, rng);
      const double a = uniform(rng, -2.0, 2.0);
      const double b = uniform(rng, -2.0, 2.0);
      const CMatrix lhs = st.gamma().power(a).power(b).matrix();
      const CMatrix rhs = st.gamma().power(a * b).matrix();
      worst = std::max(worst, (lhs - rhs).norm() / rhs.norm());
    }
    return worst;
  });

  s.run("dual_element_certificate", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const CMatrix x = ginibre(3, 3, rng);
      const double p = trial % 4 == 0 ? 1.0 : uniform(rng, 1.1, 5.0);
      const double q = p == 1.0 ? kInf : p / (p - 1.0);
      const CMatrix z = dual_element(x, p);
      worst = std::max(worst, rel_err(pairing(z, x), schatten_norm(x, p)));
      worst = std::max(worst, std::abs(schatten_norm(z, q) - 1.0));
    }
    return worst;
  });
}

void gradient_check(Suite& s) {
  s.run("gradient_finite_differences", 1e-6, [&](CounterRng& rng) {
    double worst = 0.0;
    const double h = 1e-5;
    for (int trial = 0; trial < 5; ++trial) {
      const CMatrix y = ginibre(3, 3, rng);
      const double p = trial == 0 ? 1.5 : uniform(rng, 1.2, 4.0);
      const CMatrix g = schatten_gradient(y, p);
      for (Eigen::Index j = 0; j < 3; ++j)
        for (Eigen::Index i = 0; i < 3; ++i) {
          for (const Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
            CMatrix plus = y;
            CMatrix minus = y;
            plus(i, j) += h * dir;
            minus(i, j) -= h * dir;
            const double fd = (schatten_norm(plus, p) - schatten_norm(minus, p)) / (2.0 * h);
            const double exact = dir.real() != 0.0 ? g(i, j).real() : g(i, j).imag();
            worst = std::max(worst, std::abs(fd - exact));
          }
        }
    }
    return worst;
  });
}

void cpmap_checks(Suite& s) {
  s.run("choi_adjoint_duality", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const SuperOperator t(ginibre(n * n, n * n, rng));
      const CMatrix x = ginibre(n, n, rng);
      const CMatrix y = ginibre(n, n, rng);
      const Complex lhs = (y.adjoint() * t.apply(x)).trace();
      const Complex rhs = (t.adjoint().apply(y).adjoint() * x).trace();
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      worst = std::max(worst, max_abs(t.adjoint().adjoint().action() - t.action()));
    }
    return worst;
  });

  s.run("kadison_schwarz", 1e-10, [&](CounterRng& rng) {
    double worst = -kInf;
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const SuperOperator t = SuperOperator::from_kraus(random_unital_kraus(n, 1 + trial % 3, rng));
      const double norm = schatten_norm(t.apply(identity(n)), kInf);
      const CMatrix x = ginibre(n, n, rng);
      const CMatrix tx = t.apply(x);
      const CMatrix gap = tx.adjoint() * tx - norm * t.apply(x.adjoint() * x);
      worst = std::max(worst, hermitian_eigenvalues(gap)(0));
    }
    return worst;
  });

  s.run("c1_certificate", 1e-12, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const SuperOperator t = random_cp(n, rng);
      const State st = mixed_state(n, rng);
      const double c1 = compatibility(t, st).c1;
      const CMatrix pulled = t.adjoint().apply(st.matrix());
      const RVector above = hermitian_eigenvalues((c1 + 1e-10) * st.matrix() - pulled);
      const RVector below = hermitian_eigenvalues((c1 - 1e-6) * st.matrix() - pulled);
      worst = std::max(worst, -above(above.size() - 1));
      if (below(below.size() - 1) >= 0.0) worst = kInf;
    }
    return worst;
  });

  s.run("unital_cp_c_inf", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const SuperOperator t = SuperOperator::from_kraus(random_unital_kraus(n, 2, rng));
      const CompatibilityReport r = compatibility(t, mixed_state(n, rng));
      if (!r.completely_positive || !r.unital) return kInf;
      worst = std::max(worst, std::abs(r.c_inf - 1.0));
    }
    return worst;
  });
}

void embed_checks(Suite& s) {
  s.run("embedded_identity", 1e-12, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const EmbeddedMap e = build_embedded(SuperOperator::identity(n), mixed_state(n, rng), uniform(rng, 1.0, 4.0),
                                           rng.uniform());
      worst = std::max(worst, max_abs(e.u_action.action() - CMatrix::Identity(n * n, n * n)));
    }
    return worst;
  });

  s.run("embedded_matrix_units", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const SuperOperator t = random_cp(n, rng);
      const State st = mixed_state(n, rng);
      const double p = uniform(rng, 1.0, 4.0);
      const double theta = rng.uniform();
      const EmbeddedMap e = build_embedded(t, st, p, theta);
      const CMatrix l = st.gamma().power((1.0 - theta) / p).matrix();
      const CMatrix li = st.gamma().power(-(1.0 - theta) / p).matrix();
      const CMatrix r = st.gamma().power(theta / p).matrix();
      const CMatrix ri = st.gamma().power(-theta / p).matrix();
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) {
          const CMatrix y = matrix_unit(n, i, j);
          worst = std::max(worst, max_abs(e.u_action.apply(y) - l * t.apply(li * y * ri) * r));
        }
    }
    return worst;
  });

  s.run("embedded_qubit_closed_form", 1e-12, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const double c = uniform(rng, 0.05, 0.95);
      const double p = uniform(rng, 1.0, 3.0);
      const double theta = rng.uniform();
      const EmbeddedMap e = build_embedded(qubit::qubit_map(c), qubit::qubit_state(c), p, theta);
      const double d = qubit::delta(c, p, theta);
      const double s0 = std::sqrt(c * (1.0 - c));
      CMatrix want12 = CMatrix::Zero(2, 2);
      want12(0, 1) = s0;
      want12(1, 0) = s0 * d;
      CMatrix want21 = CMatrix::Zero(2, 2);
      want21(0, 1) = s0 / d;
      want21(1, 0) = s0;
      worst = std::max(worst, max_abs(e.u_action.apply(matrix_unit(2, 0, 1)) - want12) / std::max(1.0, s0 * d));
      worst = std::max(worst, max_abs(e.u_action.apply(matrix_unit(2, 1, 0)) - want21) / std::max(1.0, s0 / d));
    }
    return worst;
  });

  s.run("classify_region_symmetry", 0.0, [&](CounterRng&) {
    double mismatches = 0.0;
    for (double p : grid_values(1.0, 3.0, 0.05))
      for (double theta : grid_values(0.0, 1.0, 0.01))
        if (!(classify_region(p, theta) == classify_region(p, 1.0 - theta))) mismatches += 1.0;
    return mismatches;
  });
}

void normest_checks(Suite& s) {
  s.run("exact_p2_vs_estimate", 1e-6, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const EmbeddedMap e = build_embedded(random_cp(n, rng), mixed_state(n, rng), 2.0, rng.uniform());
      const NormEstimate est = estimate_norm(e.u_action, 2.0, quick_config(s.seed() + trial));
      worst = std::max(worst, std::abs(est.value - exact_norm_p2(e)));
    }
    return worst;
  });

  s.run("monotone_ascent", 1e-12, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const double p = trial % 3 == 0 ? 1.0 : uniform(rng, 1.0, 4.0);
      const EmbeddedMap e = build_embedded(random_cp(n, rng), mixed_state(n, rng), p, rng.uniform());
      const AscentResult run = ascend(e.u_action, p, ginibre(n, n, rng), 200, 1e-12, true);
      for (std::size_t k = 1; k < run.history.size(); ++k)
        worst = std::max(worst, run.history[k - 1] - run.history[k]);
    }
    return worst;
  });

  s.run("witness_certified", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const double p = uniform(rng, 1.0, 4.0);
      const EmbeddedMap e = build_embedded(random_cp(n, rng), mixed_state(n, rng), p, rng.uniform());
      const NormEstimate est = estimate_norm(e.u_action, p, quick_config(s.seed() + trial));
      worst = std::max(worst, std::abs(schatten_norm(est.witness, p) - 1.0));
      worst = std::max(worst, rel_err(schatten_norm(e.u_action.apply(est.witness), p), est.value));
    }
    return worst;
  });

  s.run("lower_bound_soundness", 1e-8, [&](CounterRng& rng) {
    double worst = -kInf;
    for (int trial = 0; trial < 8; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const SuperOperator t = random_cp(n, rng);
      const State st = mixed_state(n, rng);
      const CompatibilityReport compat = compatibility(t, st);
      const bool half = trial % 2 == 1;
      const double p = half ? uniform(rng, 1.0, 2.0) : uniform(rng, 2.0, 5.0);
      const double theta = half ? 0.5 : rng.uniform();
      const EmbeddedMap e = build_embedded(t, st, p, theta);
      const NormEstimate est = estimate_norm(e.u_action, p, quick_config(s.seed() + trial));
      worst = std::max(worst, est.value - hjx_upper_bound(compat, p));
    }
    return worst;
  });

  s.run("homogeneity", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      const Eigen::Index n = 2 + trial % 2;
      const double p = uniform(rng, 1.2, 4.0);
      const EmbeddedMap e = build_embedded(random_cp(n, rng), mixed_state(n, rng), p, rng.uniform());
      const EstimatorConfig cfg = quick_config(s.seed() + trial);
      const double base = estimate_norm(e.u_action, p, cfg).value;
      const double scaled = estimate_norm(e.u_action * Complex(-3.0, 0.0), p, cfg).value;
      worst = std::max(worst, rel_err(scaled, 3.0 * base));
    }
    return worst;
  });

  s.run("theta_half_contraction", 1e-8, [&](CounterRng& rng) {
    double worst = -kInf;
    for (int trial = 0; trial < 6; ++trial) {
      const double c = uniform(rng, 0.05, 0.95);
      const double p = trial % 2 == 0 ? 1.0 : uniform(rng, 1.0, 3.0);
      const EmbeddedMap e = build_embedded(qubit::qubit_map(c), qubit::qubit_state(c), p, 0.5);
      worst = std::max(worst, estimate_norm(e.u_action, p, quick_config(s.seed() + trial)).value - 1.0);
    }
    return worst;
  });

  s.run("estimator_theta_symmetry", 1e-6, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      const double c = uniform(rng, 0.1, 0.9);
      const double p = uniform(rng, 1.2, 3.0);
      const double theta = rng.uniform();
      const EstimatorConfig cfg = quick_config(s.seed() + trial);
      const EmbeddedMap lo = build_embedded(qubit::qubit_map(c), qubit::qubit_state(c), p, theta);
      const EmbeddedMap hi = build_embedded(qubit::qubit_map(c), qubit::qubit_state(c), p, 1.0 - theta);
      worst = std::max(worst, std::abs(estimate_norm(lo.u_action, p, cfg).value - estimate_norm(hi.u_action, p, cfg).value));
    }
    return worst;
  });
}

void qubit_checks(Suite& s) {
  s.run("m_symmetry", 1e-12, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const double c = uniform(rng, 0.01, 0.99);
      const double p = uniform(rng, 1.01, 4.0);
      const double theta = rng.uniform();
      const double m = qubit::m_closed(c, p, theta);
      worst = std::max(worst, rel_err(qubit::m_closed(1.0 - c, p, theta), m));
      worst = std::max(worst, rel_err(qubit::m_closed(c, p, 1.0 - theta), m));
    }
    return worst;
  });

  s.run("m_baseline", 1e-14, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double p = trial == 0 ? 1.0 : uniform(rng, 1.0, 4.0);
      worst = std::max(worst, std::abs(qubit::m_closed(0.5, p, rng.uniform()) - 1.0));
    }
    return worst;
  });

  s.run("taylor_second_order", 1e-3, [&](CounterRng& rng) {
    double worst = 0.0;
    const double h = 1e-4;
    for (int trial = 0; trial < 20; ++trial) {
      const double p = uniform(rng, 1.05, 1.95);
      const double theta = rng.uniform();
      const double a = qubit::alpha(p, theta);
      if (std::abs(a) < 1e-3) continue;
      auto mp = [&](double t) { return std::pow(qubit::m_closed(0.5 + t, p, theta), p); };
      // coefficient of t^2, i.e. half the second derivative
      const double second = (mp(h) - 2.0 * mp(0.0) + mp(-h)) / (2.0 * h * h);
      worst = std::max(worst, rel_err(second, a));
    }
    return worst;
  });

  s.run("alpha_factorization", 1e-12, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double p = uniform(rng, 1.05, 1.95);
      const double theta = rng.uniform();
      worst = std::max(worst, std::abs(qubit::alpha(p, theta) - qubit::alpha_factored(p, theta)) /
                                  std::max(1.0, std::abs(qubit::alpha(p, theta))));
    }
    return worst;
  });

  s.run("taylor_first_order_p1", 1e-5, [&](CounterRng& rng) {
    double worst = 0.0;
    const double h = 1e-5;
    for (int trial = 0; trial < 20; ++trial) {
      const double theta = rng.uniform();
      const double d = (qubit::m_closed(0.5 + h, 1.0, theta) - qubit::m_closed(0.5 - h, 1.0, theta)) / (2.0 * h);
      worst = std::max(worst, std::abs(d - qubit::alpha1(theta)));
    }
    return worst;
  });

  s.run("alpha_sign_law", 0.0, [&](CounterRng& rng) {
    double mismatches = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const double p = uniform(rng, 1.01, 1.99);
      const double theta = rng.uniform();
      const double a = qubit::alpha(p, theta);
      if (std::abs(a) < 1e-9) continue;
      const bool outside = classify_region(p, theta).status == Region::Unbounded;
      if ((a > 0.0) != outside) mismatches += 1.0;
    }
    return mismatches;
  });

  s.run("family_vs_estimator", 1e-8, [&](CounterRng& rng) {
    double worst = -kInf;
    for (int trial = 0; trial < 6; ++trial) {
      const double c = uniform(rng, 0.1, 0.9);
      const double p = trial % 3 == 0 ? 1.0 : uniform(rng, 1.0, 2.0);
      const double theta = rng.uniform();
      const qubit::WeightPair w = qubit::family_weights(c, p, theta);
      const double fam = qubit::family_value(c, p, theta, w.a, w.b);
      const EmbeddedMap e = build_embedded(qubit::qubit_map(c), qubit::qubit_state(c), p, theta);
      EstimatorConfig cfg = quick_config(s.seed() + trial);
      const double plain = estimate_norm(e.u_action, p, cfg).value;
      CMatrix y = CMatrix::Zero(2, 2);
      y(0, 1) = w.a;
      y(1, 0) = w.b;
      cfg.seeds.push_back(y);
      const double seeded = estimate_norm(e.u_action, p, cfg).value;
      worst = std::max(worst, fam - plain);
      // seeded runs must reach the family value to 1e-10
      worst = std::max(worst, 100.0 * (fam - seeded));
    }
    return worst;
  });
}

void tensor_checks(Suite& s) {
  s.run("tensor_lower_bound", 1e-6, [&](CounterRng& rng) {
    double worst = -kInf;
    for (int trial = 0; trial < 2; ++trial) {
      const double c1 = uniform(rng, 0.2, 0.8);
      const double c2 = uniform(rng, 0.2, 0.8);
      const std::vector<TensorFactor> factors{{qubit::qubit_map(c1), qubit::qubit_state(c1)},
                                              {qubit::qubit_map(c2), qubit::qubit_state(c2)}};
      const TensorEstimate te = estimate_tensor_product(factors, 1.5, rng.uniform(), quick_config(s.seed() + trial));
      worst = std::max(worst, te.product - te.joint.value);
    }
    return worst;
  });

  s.run("tensor_p2_multiplicative", 1e-10, [&](CounterRng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const SuperOperator t1 = random_cp(2, rng);
      const SuperOperator t2 = random_cp(2, rng);
      const State s1 = mixed_state(2, rng);
      const State s2 = mixed_state(2, rng);
      const double theta = rng.uniform();
      const double f1 = exact_norm_p2(build_embedded(t1, s1, 2.0, theta));
      const double f2 = exact_norm_p2(build_embedded(t2, s2, 2.0, theta));
      const double joint = exact_norm_p2(build_embedded(kron_superop(t1, t2), kron_state(s1, s2), 2.0, theta));
      worst = std::max(worst, rel_err(joint, f1 * f2));
    }
    return worst;
  });
}

void determinism_checks(Suite& s) {
  s.run("determinism_threads", 0.0, [&](CounterRng& rng) {
    double mismatches = 0.0;
    const EmbeddedMap e = build_embedded(random_cp(3, rng), mixed_state(3, rng), 1.5, rng.uniform());
    EstimatorConfig cfg = quick_config(s.seed());
    cfg.threads = 1;
    const NormEstimate one = estimate_norm(e.u_action, 1.5, cfg);
    cfg.threads = 4;
    const NormEstimate four = estimate_norm(e.u_action, 1.5, cfg);
    const NormEstimate serial = estimate_norm_serial(e.u_action, 1.5, cfg);
    if (one.value != four.value || one.witness != four.witness) mismatches += 1.0;
    if (one.value != serial.value || one.witness != serial.witness) mismatches += 1.0;

    PhaseDiagramRequest req;
    req.p_min = 1.0;
    req.p_max = 2.5;
    req.p_step = 0.25;
    req.theta_step = 0.05;
    req.with_family = true;
    req.threads = 4;
    if (phase_diagram_csv(sweep_phase_diagram(req)) != phase_diagram_csv(sweep_phase_diagram_serial(req))) {
      mismatches += 1.0;
    }
    return mismatches;
  });
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

io::json VerifyReport::to_json() const {
  io::json arr = io::json::array();
  for (const auto& c : checks) {
    io::json item{{"name", c.name}, {"passed", c.passed}, {"worst", c.worst}, {"tolerance", c.tolerance}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    arr.push_back(std::move(item));
  }
  return io::json{{"seed", seed}, {"passed", passed()}, {"checks", std::move(arr)}};
}

VerifyReport run_invariant_suite(std::uint64_t seed) {
  Suite s(seed);
  matcore_checks(s);
  gradient_check(s);
  cpmap_checks(s);
  embed_checks(s);
  normest_checks(s);
  qubit_checks(s);
  tensor_checks(s);
  determinism_checks(s);
  return s.take();
}

}  // namespace nclp
