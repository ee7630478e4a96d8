#include "quatopt/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "quatopt/random.hpp"

namespace quatopt {

namespace {

// Projector onto {x : A x = b} with the Gram factorization cached so the
// iterative solver pays for it once.
class AffineProjector {
 public:
  AffineProjector(const QMatrix& A, const QVector& b) : A_(A), Ah_(hermitian_transpose(A)), b_(b) {
    if (A.rows() != b.size()) throw ShapeMismatch("constraint shapes disagree");
    if (A.rows() >= A.cols())
      throw RankDeficient("constraints need fewer rows than unknowns");
    {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_complex_adjoint(A).mat);
      const auto& s = svd.singularValues();
      if (!(s(s.size() - 1) > 1e-12 * s(0)))
        throw RankDeficient("constraint matrix is not of full row rank");
    }
    lu_.compute(to_complex_adjoint(matmul(A_, Ah_)).mat);
  }

  QVector gram_solve(const QVector& r) const {
    return detail::unembed_column(lu_.solve(detail::embed_column(r)));
  }

  QVector project(const QVector& y) const {
    const QVector r = sub(b_, matvec(A_, y));
    return add(y, matvec(Ah_, gram_solve(r)));
  }

  // Component of g tangent to the constraint set.
  QVector tangent(const QVector& g) const {
    return sub(g, matvec(Ah_, gram_solve(matvec(A_, g))));
  }

 private:
  QMatrix A_;
  QMatrix Ah_;
  QVector b_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

void require_certified(const QuadraticObjective& obj) {
  if (check_second_order_quadratic(obj).verdict != Verdict::Certified)
    throw NotCertifiedConvex("objective is not certified convex; refusing to iterate");
}

double objective_increase_slack(double f) { return 1e-12 * (1.0 + std::abs(f)); }

}  // namespace

SolveResult wiener_solve(const QMatrix& R, const QVector& p) {
  if (R.rows() != R.cols() || R.rows() != p.size())
    throw ShapeMismatch("filter dimensions disagree");
  if (!is_pd(R)) throw NotPD("correlation matrix is not positive definite");
  const QVector w = solve(R, p);
  SolveResult out{w};
  out.objective_value = re(inner_h(w, matvec(R, w))) - 2.0 * re(inner_h(p, w));
  out.gradient_residual = norm(scale(0.5, sub(matvec(R, w), p)));
  return out;
}

SolveResult affine_projection(const QMatrix& A, const QVector& b, const QVector& y) {
  if (A.cols() != y.size()) throw ShapeMismatch("projection dimensions disagree");
  const AffineProjector proj(A, b);
  const QVector x = proj.project(y);
  SolveResult out{x};
  out.objective_value = norm_sq(sub(x, y));
  out.constraint_residual = norm(sub(matvec(A, x), b));
  out.gradient_residual = norm(proj.tangent(scale(0.5, sub(x, y))));
  return out;
}

SolveResult mvdr_beamform(const QMatrix& R, const QVector& a) {
  if (R.rows() != R.cols() || R.rows() != a.size())
    throw ShapeMismatch("beamformer dimensions disagree");
  if (norm_sq(a) == 0.0) throw ZeroSteering("steering vector must be nonzero");
  if (!is_pd(R)) throw NotPD("covariance matrix is not positive definite");
  const QVector Ria = solve(R, a);
  const Quaternion denom = inner_h(a, Ria);
  // a^H R^{-1} a is real and positive when R is positive definite.
  if (!(re(denom) > 0.0) || norm(im(denom)) > 1e-9 * std::max(1.0, std::abs(re(denom))))
    throw NotPD("steering quadratic form failed the positivity validation");
  const QVector w = scale(1.0 / re(denom), Ria);
  SolveResult out{w};
  out.objective_value = re(inner_h(w, matvec(R, w)));
  out.constraint_residual = norm(inner_h(w, a) - Quaternion{1.0});
  const QVector g = scale(0.5, matvec(R, w));
  const Quaternion coeff = inner_h(a, g) / norm_sq(a);
  out.gradient_residual = norm(sub(g, scale_right(a, coeff)));
  return out;
}

double safe_step(const QuadraticObjective& obj) {
  double radius = 0.0;
  for (double e : eigenvalues_hermitian(obj.R())) radius = std::max(radius, std::abs(e));
  if (radius < 1e-12) return 1.0;  // flat quadratic; any step is safe
  return 1.0 / radius;
}

SolveResult gradient_descent(const QuadraticObjective& obj, const QVector& q0, double step,
                             double tol, int max_iter, const IterationCallback& cb) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (q0.size() != obj.dim()) throw ShapeMismatch("start point dimension disagrees");
  require_certified(obj);

  QVector q = q0;
  double f_prev = obj.evaluate(q);
  int increases = 0;
  for (int iter = 0;; ++iter) {
    const QVector g = obj.gradient_conjugate(q);
    const double gn = norm(g);
    const double f = obj.evaluate(q);
    if (cb) cb(iter, q, f, gn);
    if (gn <= tol || iter >= max_iter) {
      SolveResult out{q};
      out.objective_value = f;
      out.iterations = iter;
      out.gradient_residual = gn;
      return out;
    }
    q = sub(q, scale(step, g));
    const double f_next = obj.evaluate(q);
    if (f_next > f_prev + objective_increase_slack(f_prev)) {
      if (++increases >= 10) throw Diverged("objective increased for 10 consecutive iterations");
    } else {
      increases = 0;
    }
    f_prev = f_next;
  }
}

SolveResult gradient_descent(const QuadraticObjective& obj, const QVector& q0) {
  return gradient_descent(obj, q0, safe_step(obj), 1e-9, 200000);
}

SolveResult projected_gradient(const ConstrainedQP& prob, const QVector& q0, double step,
                               double tol, int max_iter, const IterationCallback& cb) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (prob.A.has_value() != prob.b.has_value())
    throw ShapeMismatch("constraints need both A and b or neither");
  if (!prob.A) return gradient_descent(prob.objective, q0, step, tol, max_iter, cb);
  const QuadraticObjective& obj = prob.objective;
  if (q0.size() != obj.dim()) throw ShapeMismatch("start point dimension disagrees");
  require_certified(obj);

  const AffineProjector proj(*prob.A, *prob.b);
  QVector q = proj.project(q0);
  double f_prev = obj.evaluate(q);
  int increases = 0;
  for (int iter = 0;; ++iter) {
    const QVector g = obj.gradient_conjugate(q);
    const QVector gt = proj.tangent(g);
    const double gn = norm(gt);
    const double f = obj.evaluate(q);
    if (cb) cb(iter, q, f, gn);
    if (gn <= tol || iter >= max_iter) {
      SolveResult out{q};
      out.objective_value = f;
      out.iterations = iter;
      out.constraint_residual = norm(sub(matvec(*prob.A, q), *prob.b));
      out.gradient_residual = gn;
      return out;
    }
    q = proj.project(sub(q, scale(step, g)));
    const double f_next = obj.evaluate(q);
    if (f_next > f_prev + objective_increase_slack(f_prev)) {
      if (++increases >= 10) throw Diverged("objective increased for 10 consecutive iterations");
    } else {
      increases = 0;
    }
    f_prev = f_next;
  }
}

SolveResult projected_gradient(const ConstrainedQP& prob, const QVector& q0) {
  return projected_gradient(prob, q0, safe_step(prob.objective), 1e-9, 200000);
}

ProbeReport local_global_probe(const ConstrainedQP& prob, int n_starts, std::uint64_t seed) {
  if (n_starts < 1) throw std::invalid_argument("probe needs at least one start");
  Rng rng(seed);
  ProbeReport report;
  report.runs.reserve(static_cast<std::size_t>(n_starts));
  for (int s = 0; s < n_starts; ++s)
    report.runs.push_back(projected_gradient(prob, random_qvector(prob.objective.dim(), rng)));
  double fmin = report.runs.front().objective_value;
  double fmax = fmin;
  for (const SolveResult& r : report.runs) {
    fmin = std::min(fmin, r.objective_value);
    fmax = std::max(fmax, r.objective_value);
  }
  report.objective_spread = fmax - fmin;
  for (std::size_t s = 0; s < report.runs.size(); ++s)
    for (std::size_t t = s + 1; t < report.runs.size(); ++t)
      report.max_pairwise_distance = std::max(
          report.max_pairwise_distance, norm(sub(report.runs[s].q_opt, report.runs[t].q_opt)));
  return report;
}

}  // namespace quatopt
