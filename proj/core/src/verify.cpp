#include "quatopt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include <Eigen/Dense>

#include "quatopt/augmented.hpp"
#include "quatopt/convexity.hpp"
#include "quatopt/ghr.hpp"
#include "quatopt/linalg.hpp"
#include "quatopt/optimize.hpp"
#include "quatopt/random.hpp"

namespace quatopt {

namespace {

using RealField = std::function<double(const Eigen::VectorXd&)>;

Eigen::VectorXd fd_gradient(const RealField& f, const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index s = 0; s < x.size(); ++s) {
    Eigen::VectorXd xp = x, xm = x;
    xp(s) += h;
    xm(s) -= h;
    g(s) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd fd_hessian(const RealField& f, const Eigen::VectorXd& x, double h) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd H(n, n);
  for (Eigen::Index s = 0; s < n; ++s)
    for (Eigen::Index t = 0; t < n; ++t) {
      Eigen::VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
      xpp(s) += h; xpp(t) += h;
      xpm(s) += h; xpm(t) -= h;
      xmp(s) -= h; xmp(t) += h;
      xmm(s) -= h; xmm(t) -= h;
      H(s, t) = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
    }
  return H;
}

QVector real_to_qvector(const Eigen::VectorXd& x) {
  QVector out(static_cast<std::size_t>(x.size()));
  for (Eigen::Index s = 0; s < x.size(); ++s)
    out[static_cast<std::size_t>(s)] = Quaternion{x(s)};
  return out;
}

QuadraticObjective random_objective(std::size_t n, Rng& rng) {
  return {random_hermitian(n, rng), random_qvector(n, rng), random_quaternion(rng).a()};
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

struct Harness {
  Rng rng;
  std::size_t samples;
  RunReport report;

  Harness(std::uint64_t seed, std::size_t samples_) : rng(seed), samples(samples_) {
    report.seed = seed;
    report.samples = samples_;
  }

  void run(const std::string& name, double tol,
           const std::function<double(Rng&)>& one_instance) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) worst = std::max(worst, one_instance(rng));
    const auto stop = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.tolerance = tol;
    r.max_violation = worst;
    r.passed = worst <= tol;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.checks.push_back(std::move(r));
  }
};

}  // namespace

bool RunReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

RunReport run_verification(std::uint64_t seed, std::size_t samples) {
  Harness h(seed, samples);

  h.run("rotation_product", 1e-12, [](Rng& rng) {
    const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
    Quaternion mu = random_quaternion(rng);
    if (mu.is_zero()) mu = Quaternion{1.0};
    return norm(rotate(p * q, mu) - rotate(p, mu) * rotate(q, mu));
  });

  h.run("rotation_composition", 1e-12, [](Rng& rng) {
    const Quaternion q = random_quaternion(rng);
    Quaternion mu = random_quaternion(rng), nu = random_quaternion(rng);
    if (mu.is_zero()) mu = Quaternion{1.0};
    if (nu.is_zero()) nu = Quaternion{1.0};
    return norm(rotate(rotate(q, nu), mu) - rotate(q, mu * nu));
  });

  h.run("rotation_conjugate", 1e-12, [](Rng& rng) {
    const Quaternion q = random_quaternion(rng);
    Quaternion mu = random_quaternion(rng);
    if (mu.is_zero()) mu = Quaternion{1.0};
    return norm(conjugate(rotate(q, mu)) - rotate(conjugate(q), mu));
  });

  h.run("norm_multiplicative", 1e-12, [](Rng& rng) {
    const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
    const double lhs = norm(p * q), rhs = norm(p) * norm(q);
    return std::abs(lhs - rhs) / (1.0 + rhs);
  });

  h.run("real_part_average", 1e-12, [](Rng& rng) {
    const Quaternion q = random_quaternion(rng);
    const Quaternion avg = (q + involution(q, Axis::I) + involution(q, Axis::J) +
                            involution(q, Axis::K)) / 4.0;
    return norm(avg - Quaternion{re(q)});
  });

  h.run("involution_matches_rotation", 1e-12, [](Rng& rng) {
    const Quaternion q = random_quaternion(rng);
    double dev = 0.0;
    for (Axis axis : {Axis::One, Axis::I, Axis::J, Axis::K})
      dev = std::max(dev, norm(involution(q, axis) - rotate(q, unit(axis))));
    return dev;
  });

  h.run("j_gram", 1e-12, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 5);
    const QMatrix J = j_matrix(n);
    return max_abs(sub(matmul(hermitian_transpose(J), J), scale(4.0, QMatrix::identity(4 * n))));
  });

  h.run("vector_bridge", 1e-12, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 6);
    const QVector q = random_qvector(n, rng);
    const QMatrix J = j_matrix(n);
    const QVector via_bridge = matvec(J, real_to_qvector(to_aug_real(q)));
    double dev = norm(sub(to_aug_quat(q), via_bridge));
    const QVector back = matvec(scale(0.25, hermitian_transpose(J)), to_aug_quat(q));
    dev = std::max(dev, norm(sub(back, real_to_qvector(to_aug_real(q)))));
    return dev;
  });

  h.run("inner_identities", 1e-12, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 6);
    return aug_inner(random_qvector(n, rng), random_qvector(n, rng)).max_violation();
  });

  h.run("gradient_transport", 1e-9, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    const QuadraticObjective obj = random_objective(n, rng);
    const QVector q = random_qvector(n, rng);
    const RealField f_real = [&](const Eigen::VectorXd& x) {
      return obj.evaluate(from_aug_real(x));
    };
    const Eigen::VectorXd x = to_aug_real(q);
    const Eigen::VectorXd grad_fd =
        fd_gradient(f_real, x, 1e-3 * std::max(1.0, x.cwiseAbs().maxCoeff()));
    const QVector grad_h = to_aug_quat(obj.gradient_conjugate(q));
    const QMatrix J = j_matrix(n);
    // grad_R = J^H grad_H* and grad_H* = J grad_R / 4
    const QVector grad_r = matvec(hermitian_transpose(J), grad_h);
    double dev = norm(sub(grad_r, real_to_qvector(grad_fd)));
    const QVector grad_h_back = matvec(scale(0.25, J), real_to_qvector(grad_fd));
    dev = std::max(dev, norm(sub(grad_h_back, grad_h)));
    return dev;
  });

  h.run("gradient_pairing", 1e-9, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    const QuadraticObjective obj = random_objective(n, rng);
    const QVector p = random_qvector(n, rng), q = random_qvector(n, rng);
    const RealField f_real = [&](const Eigen::VectorXd& x) {
      return obj.evaluate(from_aug_real(x));
    };
    const Eigen::VectorXd pr = to_aug_real(p);
    const Eigen::VectorXd grad_fd =
        fd_gradient(f_real, pr, 1e-3 * std::max(1.0, pr.cwiseAbs().maxCoeff()));
    const double lhs = grad_fd.dot(to_aug_real(q));
    const double rhs = 4.0 * re(inner_h(obj.gradient_conjugate(p), q));
    return std::abs(lhs - rhs);
  });

  h.run("gradient_norms", 1e-9, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    const QuadraticObjective obj = random_objective(n, rng);
    const QVector p = random_qvector(n, rng);
    const RealField f_real = [&](const Eigen::VectorXd& x) {
      return obj.evaluate(from_aug_real(x));
    };
    const Eigen::VectorXd pr = to_aug_real(p);
    const double norm_r =
        fd_gradient(f_real, pr, 1e-3 * std::max(1.0, pr.cwiseAbs().maxCoeff())).norm();
    const QVector g = obj.gradient_conjugate(p);
    double dev = std::abs(norm_r - 4.0 * norm(g));
    dev = std::max(dev, std::abs(norm_r - 2.0 * norm(to_aug_quat(g))));
    return dev;
  });

  h.run("hessian_hermitian", 1e-10, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    return hermitian_deviation(random_objective(n, rng).aug_hessian());
  });

  h.run("hessian_bridge", 1e-9, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    const QMatrix H = random_objective(n, rng).aug_hessian();
    const Eigen::MatrixXd Hrr = to_real_hessian(H);
    return max_abs(sub(from_real_hessian(Hrr), H));
  });

  h.run("hessian_fd", 1e-5, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 3);
    const QuadraticObjective obj = random_objective(n, rng);
    const RealField f_real = [&](const Eigen::VectorXd& x) {
      return obj.evaluate(from_aug_real(x));
    };
    const Eigen::MatrixXd Hrr = to_real_hessian(obj.aug_hessian());
    const Eigen::VectorXd x0 = to_aug_real(random_qvector(n, rng));
    const Eigen::MatrixXd Hfd = fd_hessian(f_real, x0, 1e-2);
    return (Hrr - Hfd).cwiseAbs().maxCoeff();
  });

  h.run("quadratic_form_identity", 1e-9, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    const QuadraticObjective obj = random_objective(n, rng);
    const QVector x = random_qvector(n, rng);
    const QVector xh = to_aug_quat(x);
    const double lhs = re(inner_h(xh, matvec(obj.aug_hessian(), xh)));
    const std::array<QMatrix, 4> blocks = obj.hessian_blocks();
    constexpr std::array<Axis, 4> axes = {Axis::One, Axis::I, Axis::J, Axis::K};
    double rhs = 0.0;
    for (std::size_t u = 0; u < 4; ++u) {
      QVector xu(n);
      for (std::size_t s = 0; s < n; ++s) xu[s] = involution(x[s], axes[u]);
      rhs += re(inner_h(x, matvec(blocks[u], xu)));
    }
    return std::abs(lhs - 4.0 * rhs);
  });

  h.run("derivative_oracle", 1e-6, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    const QuadraticObjective obj = random_objective(n, rng);
    const QVector q = random_qvector(n, rng);
    const ScalarField f = [&](const QVector& v) { return obj.evaluate(v); };
    const QVector g = obj.gradient_conjugate(q);
    const GradientResult num = numeric_gradient(f, q);
    return norm(sub(g, num.grad_qconj)) / (1.0 + norm(g));
  });

  h.run("conjugate_rule", 1e-9, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 3);
    const QuadraticObjective obj = random_objective(n, rng);
    const QVector q = random_qvector(n, rng);
    const ScalarField f = [&](const QVector& v) { return obj.evaluate(v); };
    Quaternion mu = random_quaternion(rng);
    if (mu.is_zero()) mu = Quaternion{1.0};
    double dev = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const Quaternion d = ghr_derivative_numeric(f, q, s, mu, false);
      const Quaternion dc = ghr_derivative_numeric(f, q, s, mu, true);
      dev = std::max(dev, norm(conjugate(d) - dc));
    }
    return dev;
  });

  h.run("residual_expansion", 1e-9, [](Rng& rng) {
    const std::size_t n = pick(rng, 1, 4);
    const std::size_t m = n + pick(rng, 0, 2);
    const QMatrix A = random_qmatrix(m, n, rng);
    const QVector b = random_qvector(m, rng);
    const QVector q = random_qvector(n, rng);
    const QuadraticObjective obj(matmul(hermitian_transpose(A), A),
                                 matvec(hermitian_transpose(A), b), norm_sq(b));
    const double direct = norm_sq(sub(matvec(A, q), b));
    return std::abs(obj.evaluate(q) - direct) / (1.0 + direct);
  });

  h.run("formulation_equivalence", 1e-6, [](Rng& rng) {
    const std::size_t n = pick(rng, 2, 4);
    const QuadraticObjective obj(random_pd(n, rng), random_qvector(n, rng),
                                 random_quaternion(rng).a());
    const QMatrix A = random_qmatrix(1, n, rng);
    const QVector b = random_qvector(1, rng);
    return equivalence_report(obj, A, b).max_deviation();
  });

  return h.report;
}

std::string format_report(const RunReport& report, bool with_timings) {
  std::string out;
  char line[192];
  std::snprintf(line, sizeof(line), "identity suite: seed=%llu samples=%zu\n",
                static_cast<unsigned long long>(report.seed), report.samples);
  out += line;
  for (const CheckResult& c : report.checks) {
    if (with_timings)
      std::snprintf(line, sizeof(line), "%-28s %s  max_violation=%.3e  tol=%.1e  (%.1f ms)\n",
                    c.name.c_str(), c.passed ? "PASS" : "FAIL", c.max_violation, c.tolerance,
                    c.elapsed_ms);
    else
      std::snprintf(line, sizeof(line), "%-28s %s  max_violation=%.3e  tol=%.1e\n",
                    c.name.c_str(), c.passed ? "PASS" : "FAIL", c.max_violation, c.tolerance);
    out += line;
  }
  std::snprintf(line, sizeof(line), "result: %s (%zu checks)\n",
                report.all_passed() ? "PASS" : "FAIL", report.checks.size());
  out += line;
  return out;
}

nlohmann::json report_to_json(const RunReport& report, bool with_timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::json entry{{"name", c.name},
                         {"passed", c.passed},
                         {"max_violation", c.max_violation},
                         {"tolerance", c.tolerance}};
    if (with_timings) entry["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(entry));
  }
  return nlohmann::json{{"seed", report.seed},
                        {"samples", report.samples},
                        {"passed", report.all_passed()},
                        {"checks", std::move(checks)}};
}

}  // namespace quatopt
