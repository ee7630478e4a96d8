#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "quatopt/qmatrix.hpp"

namespace quatopt {

// 2m x 2n complex image of an m x n quaternion matrix under the
// Cayley-Dickson split q = (a + b i) + (c + d i) j, fixed once so golden
// values stay bit-stable. Block layout:
//
//   [  Z1         Z2       ]
//   [ -conj(Z2)   conj(Z1) ]
//
// The map is an algebra homomorphism, which is what lets mature complex
// LU/eigen routines stand in for quaternion ones.
struct ComplexAdjoint {
  Eigen::MatrixXcd mat;
  std::size_t qrows = 0;
  std::size_t qcols = 0;
};

ComplexAdjoint to_complex_adjoint(const QMatrix& M);
// Inverse codec; requires the block symmetry to hold within 1e-10 (scaled by
// the largest entry magnitude), else NotAdjointStructured.
QMatrix from_complex_adjoint(const ComplexAdjoint& C);

// Left quaternion solve A x = b through the adjoint. Throws Singular when the
// adjoint condition estimate exceeds 1e12.
QVector solve(const QMatrix& A, const QVector& b);
QMatrix invert(const QMatrix& A);
double condition_estimate(const QMatrix& A);

// Right eigenvalues of a Hermitian quaternion matrix: the 2n eigenvalues of
// the Hermitian complex adjoint arrive in duplicate pairs; sorting ascending
// and keeping indices 0, 2, 4, ... dedupes them. Returned ascending.
std::vector<double> eigenvalues_hermitian(const QMatrix& M);

struct HermitianEigensystem {
  std::vector<double> values;    // ascending, deduplicated
  std::vector<QVector> vectors;  // unit quaternion right eigenvectors
};
HermitianEigensystem eigensystem_hermitian(const QMatrix& M);

// Definiteness through the adjoint spectrum. The default tolerance is
// scale-aware: 1e-9 * max(1, spectral radius).
bool is_psd(const QMatrix& M, double tol);
bool is_psd(const QMatrix& M);
bool is_pd(const QMatrix& M, double tol);
bool is_pd(const QMatrix& M);

double real_bilinear(const QVector& x, const QMatrix& M, const QVector& y);  // Re{x^H M y}

namespace detail {
// Column embedding with A(M) * embed(v) == embed(M v); used for solves and
// eigenvector reconstruction.
Eigen::VectorXcd embed_column(const QVector& v);
QVector unembed_column(const Eigen::VectorXcd& u);
}  // namespace detail

}  // namespace quatopt
