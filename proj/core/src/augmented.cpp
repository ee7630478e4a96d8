#include "quatopt/augmented.hpp"

#include <algorithm>
#include <cmath>

namespace quatopt {

namespace {

constexpr std::array<Axis, 4> kAxes = {Axis::One, Axis::I, Axis::J, Axis::K};

// Axis class of the quaternion product axis_u * axis_v (signs do not matter
// for involutions).
Axis axis_product(std::size_t u, std::size_t v) {
  if (u == v) return Axis::One;
  if (u == 0) return kAxes[v];
  if (v == 0) return kAxes[u];
  return kAxes[6 - u - v];  // {1,2,3} pairs multiply to the remaining axis
}

std::size_t block_length(const QVector& h) {
  if (h.size() % 4 != 0) throw ShapeMismatch("augmented vector length must be divisible by 4");
  return h.size() / 4;
}

}  // namespace

Eigen::VectorXd to_aug_real(const QVector& q) {
  const std::size_t n = q.size();
  Eigen::VectorXd r(4 * n);
  for (std::size_t s = 0; s < n; ++s) {
    r(static_cast<Eigen::Index>(s)) = q[s].a();
    r(static_cast<Eigen::Index>(n + s)) = q[s].b();
    r(static_cast<Eigen::Index>(2 * n + s)) = q[s].c();
    r(static_cast<Eigen::Index>(3 * n + s)) = q[s].d();
  }
  return r;
}

QVector from_aug_real(const Eigen::VectorXd& r) {
  if (r.size() % 4 != 0 || r.size() == 0)
    throw ShapeMismatch("augmented real vector length must be a positive multiple of 4");
  const std::size_t n = static_cast<std::size_t>(r.size()) / 4;
  QVector q(n);
  for (std::size_t s = 0; s < n; ++s)
    q[s] = Quaternion{r(static_cast<Eigen::Index>(s)), r(static_cast<Eigen::Index>(n + s)),
                      r(static_cast<Eigen::Index>(2 * n + s)),
                      r(static_cast<Eigen::Index>(3 * n + s))};
  return q;
}

QVector to_aug_quat(const QVector& q) {
  const std::size_t n = q.size();
  QVector h(4 * n);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t s = 0; s < n; ++s) h[u * n + s] = involution(q[s], kAxes[u]);
  return h;
}

double aug_structure_violation(const QVector& h) {
  const std::size_t n = block_length(h);
  double dev = 0.0;
  for (std::size_t u = 1; u < 4; ++u)
    for (std::size_t s = 0; s < n; ++s)
      dev = std::max(dev, norm(h[u * n + s] - involution(h[s], kAxes[u])));
  return dev;
}

QVector from_aug_quat(const QVector& h) {
  const std::size_t n = block_length(h);
  const double scale = std::max(1.0, max_abs_component(h));
  if (aug_structure_violation(h) > 1e-12 * scale)
    throw ShapeMismatch("vector does not have the stacked involution structure");
  QVector q(n);
  for (std::size_t s = 0; s < n; ++s) q[s] = h[s];
  return q;
}

QMatrix j_matrix(std::size_t n) {
  if (n == 0) throw ShapeMismatch("j_matrix needs n >= 1");
  QMatrix J(4 * n, 4 * n);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      // Column-block unit e_v, sign-flipped by the row-block involution.
      const Quaternion entry = involution(unit(kAxes[v]), kAxes[u]);
      for (std::size_t s = 0; s < n; ++s) J.at(u * n + s, v * n + s) = entry;
    }
  return J;
}

double AugmentedInner::max_violation() const {
  double dev = std::abs(re_t - transpose_aug);
  dev = std::max(dev, std::abs(herm - hermitian_aug));
  dev = std::max(dev, std::abs(herm - real_dot4));
  dev = std::max(dev, std::abs(norm_x2 - norm_aug));
  dev = std::max(dev, std::abs(norm_real_x2 - norm_aug));
  dev = std::max(dev, std::abs(sum_norm_sq - sum_expansion));
  return std::max(dev, imag_residue);
}

AugmentedInner aug_inner(const QVector& p, const QVector& q) {
  if (p.size() != q.size()) throw ShapeMismatch("aug_inner needs equal lengths");
  const QVector ph = to_aug_quat(p);
  const QVector qh = to_aug_quat(q);
  const Eigen::VectorXd pr = to_aug_real(p);
  const Eigen::VectorXd qr = to_aug_real(q);

  const Quaternion t_aug = inner_t(ph, qh);
  const Quaternion h_aug = inner_h(ph, qh);

  AugmentedInner out;
  out.re_t = 4.0 * re(inner_t(p, q));
  out.transpose_aug = re(t_aug);
  out.herm = 4.0 * re(inner_h(p, q));
  out.hermitian_aug = re(h_aug);
  out.real_dot4 = 4.0 * pr.dot(qr);
  out.norm_x2 = 2.0 * norm(p);
  out.norm_real_x2 = 2.0 * pr.norm();
  out.norm_aug = norm(ph);
  out.sum_norm_sq = norm_sq(add(p, q));
  out.sum_expansion = norm_sq(p) + 2.0 * re(inner_h(p, q)) + norm_sq(q);
  out.imag_residue = std::max(norm(im(t_aug)), norm(im(h_aug)));
  return out;
}

QMatrix assemble_aug_hessian(const std::array<QMatrix, 4>& first_row_blocks) {
  const std::size_t n = first_row_blocks[0].rows();
  for (const QMatrix& B : first_row_blocks)
    if (B.rows() != n || B.cols() != n) throw ShapeMismatch("hessian blocks must all be n x n");
  QMatrix H(4 * n, 4 * n);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      const QMatrix& B = first_row_blocks[static_cast<std::size_t>(axis_product(u, v))];
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          H.at(u * n + s, v * n + t) = involution(B.at(s, t), kAxes[u]);
    }
  return H;
}

Eigen::MatrixXd to_real_hessian(const QMatrix& aug_hessian) {
  if (aug_hessian.rows() != aug_hessian.cols() || aug_hessian.rows() % 4 != 0)
    throw ShapeMismatch("augmented Hessian must be square with dimension 4n");
  const std::size_t n = aug_hessian.rows() / 4;
  const QMatrix J = j_matrix(n);
  const QMatrix T = matmul(matmul(hermitian_transpose(J), aug_hessian), J);
  double residue = 0.0;
  for (std::size_t s = 0; s < T.rows(); ++s)
    for (std::size_t t = 0; t < T.cols(); ++t) residue = std::max(residue, norm(im(T.at(s, t))));
  if (residue > 1e-6 * std::max(1.0, max_abs(T)))
    throw NotRealResult("J^H H J has imaginary residue above tolerance");
  Eigen::MatrixXd R(T.rows(), T.cols());
  for (std::size_t s = 0; s < T.rows(); ++s)
    for (std::size_t t = 0; t < T.cols(); ++t)
      R(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) = T.at(s, t).a();
  return R;
}

QMatrix from_real_hessian(const Eigen::MatrixXd& real_hessian) {
  if (real_hessian.rows() != real_hessian.cols() || real_hessian.rows() % 4 != 0 ||
      real_hessian.rows() == 0)
    throw ShapeMismatch("real Hessian must be square with dimension 4n");
  const std::size_t dim = static_cast<std::size_t>(real_hessian.rows());
  const std::size_t n = dim / 4;
  QMatrix Hr(dim, dim);
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t)
      Hr.at(s, t) =
          Quaternion{real_hessian(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t))};
  const QMatrix J = j_matrix(n);
  return scale(1.0 / 16.0, matmul(matmul(J, Hr), hermitian_transpose(J)));
}

}  // namespace quatopt
