#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Core>

#include "quatopt/qmatrix.hpp"

namespace quatopt {

// Stacked real coordinates (qa; qb; qc; qd) of a quaternion n-vector,
// length 4n. The inverse rejects lengths not divisible by 4.
Eigen::VectorXd to_aug_real(const QVector& q);
QVector from_aug_real(const Eigen::VectorXd& r);

// Stacked involutions (q; q^i; q^j; q^k), length 4n. Membership in the
// structured set is measurable: blocks 2..4 must be the axis involutions of
// block 1.
QVector to_aug_quat(const QVector& q);
double aug_structure_violation(const QVector& h);
QVector from_aug_quat(const QVector& h);

// The 4n x 4n bridge with rows (I, +-iI, +-jI, +-kI); satisfies J^H J = 4I
// and aug_quat(q) = J * aug_real(q).
QMatrix j_matrix(std::size_t n);

// Both sides of the augmented inner-product identities, evaluated
// independently so callers can assert the equalities.
struct AugmentedInner {
  double re_t = 0.0;           // 4 Re{p^T q}
  double transpose_aug = 0.0;  // Re part of p_H^T q_H
  double herm = 0.0;           // 4 Re{p^H q}
  double hermitian_aug = 0.0;  // Re part of p_H^H q_H
  double real_dot4 = 0.0;      // 4 p_R^T q_R
  double norm_x2 = 0.0;        // 2 ||p||
  double norm_real_x2 = 0.0;   // 2 ||p_R||
  double norm_aug = 0.0;       // ||p_H||
  double sum_norm_sq = 0.0;    // ||p + q||^2
  double sum_expansion = 0.0;  // ||p||^2 + 2 Re{p^H q} + ||q||^2
  double imag_residue = 0.0;   // imaginary leakage of the augmented scalars

  double max_violation() const;
};
AugmentedInner aug_inner(const QVector& p, const QVector& q);

// Builds the full 4n x 4n augmented Hessian from the four first-row blocks
// B_nu = H_{q^nu q*}. Row mu is filled by the rotation rule: block (mu, nu)
// is the entrywise mu-involution of B_{axis(mu*nu)}. Hermitian whenever the
// blocks come from a genuine real-valued objective.
QMatrix assemble_aug_hessian(const std::array<QMatrix, 4>& first_row_blocks);

// H_RR = J^H H_HH* J. The forward map validates that the imaginary residue
// stays below 1e-6 (scaled) before discarding it, so assembly bugs surface
// as NotRealResult instead of silent truncation.
Eigen::MatrixXd to_real_hessian(const QMatrix& aug_hessian);
// H_HH* = (1/16) J H_RR J^H.
QMatrix from_real_hessian(const Eigen::MatrixXd& real_hessian);

}  // namespace quatopt
