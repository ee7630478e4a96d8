#include "quatopt/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "quatopt/random.hpp"

namespace quatopt {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::FirstOrder: return "first_order";
    case Criterion::GradientMonotonicity: return "gradient_monotonicity";
    case Criterion::SecondOrder: return "second_order";
    case Criterion::StrongFirstOrder: return "strong_first_order";
    case Criterion::StrongMonotonicity: return "strong_monotonicity";
    case Criterion::StrongSecondOrder: return "strong_second_order";
  }
  return "unknown";
}

SampledDomain SampledDomain::all_space(std::size_t n, std::size_t pair_count,
                                       std::uint64_t seed) {
  if (n == 0) throw ShapeMismatch("domain dimension must be positive");
  return SampledDomain(Kind::AllSpace, n, pair_count, seed);
}

SampledDomain SampledDomain::box(const QVector& lo, const QVector& hi, std::size_t pair_count,
                                 std::uint64_t seed) {
  if (lo.size() != hi.size()) throw ShapeMismatch("box bounds disagree in length");
  for (std::size_t s = 0; s < lo.size(); ++s) {
    if (lo[s].a() > hi[s].a() || lo[s].b() > hi[s].b() || lo[s].c() > hi[s].c() ||
        lo[s].d() > hi[s].d())
      throw ShapeMismatch("box lower bound exceeds upper bound");
  }
  SampledDomain dom(Kind::Box, lo.size(), pair_count, seed);
  dom.lo_ = lo;
  dom.hi_ = hi;
  return dom;
}

std::vector<QVector> SampledDomain::draw(std::size_t count) const {
  Rng rng(seed_);
  std::vector<QVector> pts;
  pts.reserve(count);
  if (kind_ == Kind::AllSpace) {
    for (std::size_t s = 0; s < count; ++s) pts.push_back(random_qvector(n_, rng));
    return pts;
  }
  for (std::size_t s = 0; s < count; ++s) {
    QVector q(n_);
    for (std::size_t t = 0; t < n_; ++t) {
      const Quaternion& lo = (*lo_)[t];
      const Quaternion& hi = (*hi_)[t];
      auto u = [&](double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(rng);
      };
      q[t] = Quaternion{u(lo.a(), hi.a()), u(lo.b(), hi.b()), u(lo.c(), hi.c()),
                        u(lo.d(), hi.d())};
    }
    pts.push_back(std::move(q));
  }
  return pts;
}

bool SampledDomain::contains(const QVector& q) const {
  if (q.size() != n_) return false;
  if (kind_ == Kind::AllSpace) return true;
  for (std::size_t t = 0; t < n_; ++t) {
    const Quaternion& lo = (*lo_)[t];
    const Quaternion& hi = (*hi_)[t];
    const Quaternion& e = q[t];
    if (e.a() < lo.a() || e.a() > hi.a() || e.b() < lo.b() || e.b() > hi.b() ||
        e.c() < lo.c() || e.c() > hi.c() || e.d() < lo.d() || e.d() > hi.d())
      return false;
  }
  return true;
}

namespace {

void validate_gradient_consistency(const ScalarField& f, const GradientFn& grad,
                                   const SampledDomain& dom) {
  for (const QVector& x : dom.draw(5)) {
    const QVector g = grad(x);
    const GradientResult num = numeric_gradient(f, x);
    if (norm(sub(g, num.grad_qconj)) > 1e-4 * (1.0 + norm(g)))
      throw GradientMismatch("supplied gradient disagrees with the numeric oracle");
  }
}

// Relative scaling keeps rounding from producing false refutations.
double pair_tolerance(double fp, double fq) {
  return 1e-8 * (1.0 + std::abs(fp) + std::abs(fq));
}

template <typename Margin>
Certificate pairwise_refuter(Criterion crit, const ScalarField& f, const GradientFn& grad,
                             const SampledDomain& dom, const PairList& seeded,
                             const Margin& margin) {
  validate_gradient_consistency(f, grad, dom);
  Certificate cert;
  cert.criterion = crit;
  cert.verdict = Verdict::Inconclusive;
  auto probe = [&](const QVector& p, const QVector& q) {
    const double m = margin(p, q);
    if (m < -pair_tolerance(f(p), f(q))) {
      cert.verdict = Verdict::Refuted;
      cert.witness = Witness{p, q, -m};
      return true;
    }
    return false;
  };
  // Seeded candidates first so injected witness directions win deterministically.
  for (const auto& [p, q] : seeded)
    if (probe(p, q)) return cert;
  const std::vector<QVector> pts = dom.draw(2 * dom.pair_count());
  for (std::size_t s = 0; s + 1 < pts.size(); s += 2)
    if (probe(pts[s], pts[s + 1])) return cert;
  return cert;
}

}  // namespace

Certificate check_first_order(const ScalarField& f, const GradientFn& grad,
                              const SampledDomain& dom, const PairList& seeded) {
  return pairwise_refuter(Criterion::FirstOrder, f, grad, dom, seeded,
                          [&](const QVector& p, const QVector& q) {
                            return f(q) - f(p) - 4.0 * re(inner_h(grad(p), sub(q, p)));
                          });
}

Certificate check_monotonicity(const ScalarField& f, const GradientFn& grad,
                               const SampledDomain& dom, const PairList& seeded) {
  return pairwise_refuter(Criterion::GradientMonotonicity, f, grad, dom, seeded,
                          [&](const QVector& p, const QVector& q) {
                            return re(inner_h(sub(grad(p), grad(q)), sub(p, q)));
                          });
}

Certificate check_strong_first_order(const ScalarField& f, const GradientFn& grad,
                                     const SampledDomain& dom, double sigma,
                                     const PairList& seeded) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return pairwise_refuter(Criterion::StrongFirstOrder, f, grad, dom, seeded,
                          [&](const QVector& p, const QVector& q) {
                            return f(q) - f(p) - 4.0 * re(inner_h(grad(p), sub(q, p))) -
                                   0.5 * sigma * norm_sq(sub(q, p));
                          });
}

Certificate check_strong_monotonicity(const ScalarField& f, const GradientFn& grad,
                                      const SampledDomain& dom, double sigma,
                                      const PairList& seeded) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return pairwise_refuter(Criterion::StrongMonotonicity, f, grad, dom, seeded,
                          [&](const QVector& p, const QVector& q) {
                            return re(inner_h(sub(grad(p), grad(q)), sub(p, q))) -
                                   0.25 * sigma * norm_sq(sub(p, q));
                          });
}

namespace {

struct Spectrum {
  double lam_min = 0.0;
  double radius = 0.0;
  double tol = 0.0;
};

Spectrum aug_hessian_spectrum(const QuadraticObjective& obj) {
  const std::vector<double> eigs = eigenvalues_hermitian(obj.aug_hessian());
  Spectrum s;
  s.lam_min = eigs.front();
  for (double e : eigs) s.radius = std::max(s.radius, std::abs(e));
  s.tol = 1e-9 * std::max(1.0, s.radius);
  return s;
}

// Pair (v, 0) along the most negative eigendirection of R/2; its
// monotonicity margin is exactly the negative eigenvalue.
Witness eigen_witness(const QuadraticObjective& obj) {
  const HermitianEigensystem sys = eigensystem_hermitian(scale(0.5, obj.R()));
  const QVector v = sys.vectors.front();
  const QVector zero(obj.dim());
  const double margin =
      re(inner_h(sub(obj.gradient_conjugate(v), obj.gradient_conjugate(zero)), v));
  return Witness{v, zero, -margin};
}

}  // namespace

Certificate check_second_order_quadratic(const QuadraticObjective& obj) {
  const Spectrum s = aug_hessian_spectrum(obj);
  Certificate cert;
  cert.criterion = Criterion::SecondOrder;
  cert.sigma = std::max(0.0, 4.0 * s.lam_min);
  if (s.lam_min >= -s.tol) {
    cert.verdict = Verdict::Certified;
  } else {
    cert.verdict = Verdict::Refuted;
    cert.witness = eigen_witness(obj);
  }
  return cert;
}

bool check_necessary_block(const QuadraticObjective& obj) {
  return is_psd(scale(0.5, obj.R()));
}

Certificate check_strong_convexity(const QuadraticObjective& obj, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  const Spectrum s = aug_hessian_spectrum(obj);
  Certificate cert;
  cert.criterion = Criterion::StrongSecondOrder;
  cert.sigma = std::max(0.0, 4.0 * s.lam_min);
  if (s.lam_min >= 0.25 * sigma - s.tol) {
    cert.verdict = Verdict::Certified;
  } else {
    cert.verdict = Verdict::Refuted;
    // Threshold shortfall along the flattest direction.
    const HermitianEigensystem sys = eigensystem_hermitian(scale(0.5, obj.R()));
    cert.witness = Witness{sys.vectors.front(), QVector(obj.dim()), 0.25 * sigma - s.lam_min};
  }
  return cert;
}

double estimate_sigma(const QuadraticObjective& obj) {
  return std::max(0.0, 4.0 * aug_hessian_spectrum(obj).lam_min);
}

std::function<double(double)> restrict_to_line(const ScalarField& f, const QVector& q,
                                               const QVector& v) {
  if (q.size() != v.size()) throw ShapeMismatch("base point and direction disagree");
  if (norm_sq(v) == 0.0) throw ZeroDirection("line direction must be nonzero");
  return [f, q, v](double t) { return f(add(q, scale(t, v))); };
}

namespace {

// diag(A, A^i, A^j, A^k)
QMatrix block_diag_involutions(const QMatrix& A) {
  constexpr std::array<Axis, 4> axes = {Axis::One, Axis::I, Axis::J, Axis::K};
  QMatrix out(4 * A.rows(), 4 * A.cols());
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t s = 0; s < A.rows(); ++s)
      for (std::size_t t = 0; t < A.cols(); ++t)
        out.at(u * A.rows() + s, u * A.cols() + t) = involution(A.at(s, t), axes[u]);
  return out;
}

Eigen::MatrixXd real_constraint_matrix(const QMatrix& A) {
  const std::size_t p = A.rows(), n = A.cols();
  const QMatrix Ah = block_diag_involutions(A);
  const QMatrix T = scale(0.25, matmul(matmul(hermitian_transpose(j_matrix(p)), Ah), j_matrix(n)));
  double residue = 0.0;
  for (std::size_t s = 0; s < T.rows(); ++s)
    for (std::size_t t = 0; t < T.cols(); ++t) residue = std::max(residue, norm(im(T.at(s, t))));
  if (residue > 1e-9 * std::max(1.0, max_abs(T)))
    throw NotRealResult("real constraint embedding has imaginary residue");
  Eigen::MatrixXd R(T.rows(), T.cols());
  for (std::size_t s = 0; s < T.rows(); ++s)
    for (std::size_t t = 0; t < T.cols(); ++t)
      R(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) = T.at(s, t).a();
  return R;
}

}  // namespace

double EquivalenceReport::max_deviation() const {
  double dev = solution_deviation;
  dev = std::max(dev, mapping_deviation);
  dev = std::max(dev, std::abs(objective_quaternion - objective_real));
  dev = std::max(dev, std::abs(objective_quaternion - objective_augmented));
  dev = std::max(dev, feasibility_quaternion);
  dev = std::max(dev, feasibility_augmented);
  dev = std::max(dev, feasibility_real);
  return dev;
}

EquivalenceReport equivalence_report(const QuadraticObjective& obj,
                                     const std::optional<QMatrix>& A,
                                     const std::optional<QVector>& b) {
  const std::size_t n = obj.dim();
  if (A.has_value() != b.has_value())
    throw ShapeMismatch("constraints need both A and b or neither");
  if (A && (A->cols() != n || A->rows() != b->size()))
    throw ShapeMismatch("constraint shapes disagree with the objective");
  const std::size_t p = A ? A->rows() : 0;

  // Route 1: quaternion stationarity. With constraints the multiplier is
  // absorbed into the block system [R, A^H; A, O] (q; lam) = (p; b).
  QVector q_quat(n);
  if (!A) {
    q_quat = solve(obj.R(), obj.p());
  } else {
    QMatrix K(n + p, n + p);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) K.at(s, t) = obj.R().at(s, t);
    const QMatrix Ah = hermitian_transpose(*A);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < p; ++t) K.at(s, n + t) = Ah.at(s, t);
    for (std::size_t s = 0; s < p; ++s)
      for (std::size_t t = 0; t < n; ++t) K.at(n + s, t) = A->at(s, t);
    QVector rhs(n + p);
    for (std::size_t s = 0; s < n; ++s) rhs[s] = obj.p()[s];
    for (std::size_t s = 0; s < p; ++s) rhs[n + s] = (*b)[s];
    const QVector sol = solve(K, rhs);
    for (std::size_t s = 0; s < n; ++s) q_quat[s] = sol[s];
  }

  // Route 2: real coordinates. Stationarity of f(q_R) under A_R q_R = b_R.
  const Eigen::MatrixXd Hrr = to_real_hessian(obj.aug_hessian());
  const Eigen::VectorXd pr = to_aug_real(obj.p());
  Eigen::VectorXd x;
  if (!A) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(Hrr);
    if (!lu.isInvertible()) throw Singular("real stationarity system is singular");
    x = lu.solve(2.0 * pr);
  } else {
    const Eigen::MatrixXd Ar = real_constraint_matrix(*A);
    const Eigen::VectorXd br = to_aug_real(*b);
    const Eigen::Index dim = Hrr.rows() + Ar.rows();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(dim, dim);
    K.topLeftCorner(Hrr.rows(), Hrr.cols()) = Hrr;
    K.topRightCorner(Ar.cols(), Ar.rows()) = Ar.transpose();
    K.bottomLeftCorner(Ar.rows(), Ar.cols()) = Ar;
    Eigen::VectorXd rhs(dim);
    rhs.head(Hrr.rows()) = 2.0 * pr;
    rhs.tail(Ar.rows()) = br;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(K);
    if (!lu.isInvertible()) throw Singular("real saddle-point system is singular");
    x = lu.solve(rhs).head(Hrr.rows());
  }
  const QVector q_real = from_aug_real(x);

  // Route 3: the stacked-involution representation of the real optimum,
  // once through the bridge matrix and once by direct stacking.
  QVector xq(4 * n);
  for (std::size_t s = 0; s < 4 * n; ++s) xq[s] = Quaternion{x(static_cast<Eigen::Index>(s))};
  const QVector qh_bridge = matvec(j_matrix(n), xq);
  const QVector qh_stacked = to_aug_quat(q_real);

  EquivalenceReport rpt{q_quat, q_real};
  rpt.objective_quaternion = obj.evaluate(q_quat);
  rpt.objective_real = obj.evaluate(q_real);
  const QMatrix H = obj.aug_hessian();
  rpt.objective_augmented = 0.5 * re(inner_h(qh_bridge, matvec(H, qh_bridge))) -
                            0.5 * re(inner_h(to_aug_quat(obj.p()), qh_bridge)) + obj.c();
  rpt.solution_deviation = norm(sub(q_quat, q_real));
  rpt.mapping_deviation = norm(sub(qh_bridge, qh_stacked));
  if (A) {
    rpt.feasibility_quaternion = norm(sub(matvec(*A, q_quat), *b));
    rpt.feasibility_augmented =
        norm(sub(matvec(block_diag_involutions(*A), qh_bridge), to_aug_quat(*b)));
    rpt.feasibility_real = (real_constraint_matrix(*A) * x - to_aug_real(*b)).norm();
  }
  return rpt;
}

}  // namespace quatopt
