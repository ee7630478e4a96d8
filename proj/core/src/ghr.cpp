#include "quatopt/ghr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quatopt {

namespace {

QVector bump(const QVector& q, std::size_t index, std::size_t comp, double h) {
  QVector out = q;
  const Quaternion& e = q[index];
  switch (comp) {
    case 0: out[index] = Quaternion{e.a() + h, e.b(), e.c(), e.d()}; break;
    case 1: out[index] = Quaternion{e.a(), e.b() + h, e.c(), e.d()}; break;
    case 2: out[index] = Quaternion{e.a(), e.b(), e.c() + h, e.d()}; break;
    default: out[index] = Quaternion{e.a(), e.b(), e.c(), e.d() + h}; break;
  }
  return out;
}

}  // namespace

double default_fd_step(const QVector& q) { return 1e-5 * std::max(1.0, max_abs_component(q)); }

Quaternion ghr_derivative_numeric(const ScalarField& f, const QVector& q, std::size_t index,
                                  const Quaternion& mu, bool conjugated, double step) {
  if (mu.is_zero()) throw ZeroRotator("GHR derivative needs a nonzero rotation parameter");
  if (index >= q.size()) throw ShapeMismatch("derivative index out of range");
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");

  double partial[4];
  for (std::size_t comp = 0; comp < 4; ++comp)
    partial[comp] = (f(bump(q, index, comp, step)) - f(bump(q, index, comp, -step))) / (2.0 * step);

  const Quaternion iu = rotate(unit(Axis::I), mu);
  const Quaternion ju = rotate(unit(Axis::J), mu);
  const Quaternion ku = rotate(unit(Axis::K), mu);
  const double sgn = conjugated ? 1.0 : -1.0;
  Quaternion acc{partial[0]};
  acc += Quaternion{sgn * partial[1]} * iu;
  acc += Quaternion{sgn * partial[2]} * ju;
  acc += Quaternion{sgn * partial[3]} * ku;
  return Quaternion{0.25} * acc;
}

Quaternion ghr_derivative_numeric(const ScalarField& f, const QVector& q, std::size_t index,
                                  const Quaternion& mu, bool conjugated) {
  return ghr_derivative_numeric(f, q, index, mu, conjugated, default_fd_step(q));
}

GradientResult numeric_gradient(const ScalarField& f, const QVector& q, double step) {
  GradientResult out{QVector(q.size()), QVector(q.size())};
  for (std::size_t s = 0; s < q.size(); ++s) {
    out.grad_q[s] = ghr_derivative_numeric(f, q, s, unit(Axis::One), false, step);
    out.grad_qconj[s] = ghr_derivative_numeric(f, q, s, unit(Axis::One), true, step);
  }
  return out;
}

GradientResult numeric_gradient(const ScalarField& f, const QVector& q) {
  return numeric_gradient(f, q, default_fd_step(q));
}

QuadraticObjective::QuadraticObjective(QMatrix R, QVector p, double c)
    : R_(std::move(R)), p_(std::move(p)), c_(c) {
  if (R_.rows() != R_.cols() || R_.rows() != p_.size())
    throw ShapeMismatch("quadratic objective needs square R matching p");
  if (!std::isfinite(c_)) throw NonFiniteValue("constant term is not finite");
  if (hermitian_deviation(R_) > 1e-10 * std::max(1.0, max_abs(R_)))
    throw NotHermitian("quadratic objective needs Hermitian R");
}

double QuadraticObjective::evaluate(const QVector& q) const {
  if (q.size() != dim()) throw ShapeMismatch("objective dimension disagrees");
  return re(inner_h(q, matvec(R_, q))) - 2.0 * re(inner_h(p_, q)) + c_;
}

QVector QuadraticObjective::gradient_conjugate(const QVector& q) const {
  if (q.size() != dim()) throw ShapeMismatch("objective dimension disagrees");
  return scale(0.5, sub(matvec(R_, q), p_));
}

std::array<QMatrix, 4> QuadraticObjective::hessian_blocks() const {
  const std::size_t n = dim();
  return {scale(0.5, R_), QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
}

QMatrix QuadraticObjective::aug_hessian() const { return assemble_aug_hessian(hessian_blocks()); }

GradientResult DerivativePair::gradient() const {
  if (d_q.rows() != 1 || d_qconj.rows() != 1)
    throw ShapeMismatch("gradient() needs a scalar-valued derivative row");
  GradientResult out{QVector(d_q.cols()), QVector(d_q.cols())};
  for (std::size_t t = 0; t < d_q.cols(); ++t) {
    out.grad_q[t] = d_q.at(0, t);
    out.grad_qconj[t] = d_qconj.at(0, t);
  }
  return out;
}

DerivativePair derivative_transpose_linear(const QVector& a, const Quaternion& beta,
                                           const QVector& q) {
  if (a.size() != q.size()) throw ShapeMismatch("coefficient vector length disagrees");
  DerivativePair out{QMatrix(1, q.size()), QMatrix(1, q.size())};
  const Quaternion beta_conj = conjugate(beta);
  for (std::size_t t = 0; t < q.size(); ++t) {
    out.d_q.at(0, t) = a[t] * Quaternion{re(beta)};
    out.d_qconj.at(0, t) = Quaternion{-0.5} * (a[t] * beta_conj);
  }
  return out;
}

DerivativePair derivative_conjugate_linear(const Quaternion& alpha, const QVector& b,
                                           const QVector& q) {
  if (b.size() != q.size()) throw ShapeMismatch("coefficient vector length disagrees");
  DerivativePair out{QMatrix(1, q.size()), QMatrix(1, q.size())};
  for (std::size_t t = 0; t < q.size(); ++t) {
    out.d_q.at(0, t) = Quaternion{-0.5} * (alpha * conjugate(b[t]));
    out.d_qconj.at(0, t) = alpha * Quaternion{re(b[t])};
  }
  return out;
}

DerivativePair derivative_matrix_linear(const QMatrix& A, const Quaternion& beta,
                                        const QVector& q) {
  if (A.cols() != q.size()) throw ShapeMismatch("matrix columns disagree with q");
  DerivativePair out{QMatrix(A.rows(), A.cols()), QMatrix(A.rows(), A.cols())};
  const Quaternion beta_conj = conjugate(beta);
  for (std::size_t s = 0; s < A.rows(); ++s)
    for (std::size_t t = 0; t < A.cols(); ++t) {
      out.d_q.at(s, t) = A.at(s, t) * Quaternion{re(beta)};
      out.d_qconj.at(s, t) = Quaternion{-0.5} * (A.at(s, t) * beta_conj);
    }
  return out;
}

DerivativePair derivative_quadratic_form(const QMatrix& A, const QVector& q) {
  if (A.rows() != A.cols() || A.cols() != q.size())
    throw ShapeMismatch("quadratic form needs square A matching q");
  const std::size_t n = q.size();
  // (q^H A)_t and (A q)_t
  QVector qhA(n);
  for (std::size_t t = 0; t < n; ++t) {
    Quaternion acc;
    for (std::size_t s = 0; s < n; ++s) acc += conjugate(q[s]) * A.at(s, t);
    qhA[t] = acc;
  }
  const QVector Aq = matvec(A, q);
  DerivativePair out{QMatrix(1, n), QMatrix(1, n)};
  for (std::size_t t = 0; t < n; ++t) {
    out.d_q.at(0, t) = qhA[t] - Quaternion{0.5} * conjugate(Aq[t]);
    out.d_qconj.at(0, t) = Quaternion{-0.5} * qhA[t] + Quaternion{re(Aq[t])};
  }
  return out;
}

DerivativePair analytic_derivative(AnalyticForm form, const AnalyticParams& params,
                                   const QVector& q) {
  switch (form) {
    case AnalyticForm::TransposeLinear:
      if (!params.a) throw ShapeMismatch("transpose-linear form needs vector a");
      return derivative_transpose_linear(*params.a, params.beta, q);
    case AnalyticForm::ConjugateLinear:
      if (!params.b) throw ShapeMismatch("conjugate-linear form needs vector b");
      return derivative_conjugate_linear(params.alpha, *params.b, q);
    case AnalyticForm::MatrixLinear:
      if (!params.A) throw ShapeMismatch("matrix-linear form needs matrix A");
      return derivative_matrix_linear(*params.A, params.beta, q);
    case AnalyticForm::QuadraticForm:
      if (!params.A) throw ShapeMismatch("quadratic form needs matrix A");
      return derivative_quadratic_form(*params.A, q);
  }
  throw Error("unreachable analytic form");
}

}  // namespace quatopt
