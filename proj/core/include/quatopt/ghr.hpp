#pragma once

#include <array>
#include <functional>
#include <optional>

#include "quatopt/augmented.hpp"
#include "quatopt/qmatrix.hpp"

namespace quatopt {

// Real-valued objective over quaternion vectors. Must be pure and finite on
// finite input; numeric differentiation may evaluate it at many points.
using ScalarField = std::function<double(const QVector&)>;

// Column-convention gradients: nabla = (df/d.)^T. For real-valued f the
// conjugate rule makes grad_q the entrywise conjugate of grad_qconj.
struct GradientResult {
  QVector grad_q;
  QVector grad_qconj;
};

// Central-difference step balancing truncation against cancellation in
// double precision: 1e-5 * max(1, ||q||_inf).
double default_fd_step(const QVector& q);

// Left GHR derivative of f at component `index` with respect to q^mu
// (conjugated=false) or q^{mu*} (conjugated=true): the four real partials are
// estimated by central differences and combined as
//   1/4 (df/dqa -+ df/dqb i^mu -+ df/dqc j^mu -+ df/dqd k^mu)
// with i^mu = rotate(i, mu) and so on.
Quaternion ghr_derivative_numeric(const ScalarField& f, const QVector& q, std::size_t index,
                                  const Quaternion& mu, bool conjugated, double step);
Quaternion ghr_derivative_numeric(const ScalarField& f, const QVector& q, std::size_t index,
                                  const Quaternion& mu, bool conjugated);

GradientResult numeric_gradient(const ScalarField& f, const QVector& q, double step);
GradientResult numeric_gradient(const ScalarField& f, const QVector& q);

// f(q) = Re{q^H R q} - 2 Re{p^H q} + c with Hermitian R: the quadratic shape
// shared by the mean-square-error filter, the affine projection and the
// beamformer objectives.
class QuadraticObjective {
 public:
  QuadraticObjective(QMatrix R, QVector p, double c);

  const QMatrix& R() const { return R_; }
  const QVector& p() const { return p_; }
  double c() const { return c_; }
  std::size_t dim() const { return p_.size(); }

  double evaluate(const QVector& q) const;
  // nabla_{q*} f = (R q - p) / 2
  QVector gradient_conjugate(const QVector& q) const;
  // First-row augmented Hessian blocks: (R/2, O, O, O).
  std::array<QMatrix, 4> hessian_blocks() const;
  QMatrix aug_hessian() const;

 private:
  QMatrix R_;
  QVector p_;
  double c_;
};

// Closed-form GHR derivatives of the four standard function shapes. The
// derivative rows are kept in matrix form (1 x n for the scalar-valued
// shapes, m x n for the matrix-linear one); gradient() transposes a scalar
// row into the column convention.
struct DerivativePair {
  QMatrix d_q;
  QMatrix d_qconj;

  GradientResult gradient() const;
};

DerivativePair derivative_transpose_linear(const QVector& a, const Quaternion& beta,
                                           const QVector& q);                   // a^T q beta
DerivativePair derivative_conjugate_linear(const Quaternion& alpha, const QVector& b,
                                           const QVector& q);                   // alpha q^H b
DerivativePair derivative_matrix_linear(const QMatrix& A, const Quaternion& beta,
                                        const QVector& q);                      // A q beta
DerivativePair derivative_quadratic_form(const QMatrix& A, const QVector& q);   // q^H A q

enum class AnalyticForm { TransposeLinear, ConjugateLinear, MatrixLinear, QuadraticForm };

struct AnalyticParams {
  std::optional<QMatrix> A;
  std::optional<QVector> a;
  std::optional<QVector> b;
  Quaternion alpha{1.0};
  Quaternion beta{1.0};
};

DerivativePair analytic_derivative(AnalyticForm form, const AnalyticParams& params,
                                   const QVector& q);

}  // namespace quatopt
