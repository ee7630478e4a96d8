#include "quatopt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Dense>

namespace quatopt {

namespace {

constexpr double kSingularCondition = 1e12;

using Cplx = std::complex<double>;

void require_square(const QMatrix& A, const char* what) {
  if (A.rows() != A.cols()) throw ShapeMismatch(what);
}

void require_hermitian(const QMatrix& M) {
  require_square(M, "hermitian operation needs a square matrix");
  if (hermitian_deviation(M) > 1e-10 * std::max(1.0, max_abs(M)))
    throw NotHermitian("matrix is not Hermitian within tolerance");
}

Eigen::JacobiSVD<Eigen::MatrixXcd> checked_svd(const QMatrix& A) {
  const ComplexAdjoint C = to_complex_adjoint(A);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(C.mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0) || smax / smin > kSingularCondition)
    throw Singular("adjoint condition estimate exceeds 1e12");
  return svd;
}

}  // namespace

namespace detail {

Eigen::VectorXcd embed_column(const QVector& v) {
  const std::size_t n = v.size();
  Eigen::VectorXcd u(2 * n);
  for (std::size_t s = 0; s < n; ++s) {
    u(static_cast<Eigen::Index>(s)) = Cplx(v[s].a(), v[s].b());
    u(static_cast<Eigen::Index>(n + s)) = Cplx(-v[s].c(), v[s].d());
  }
  return u;
}

QVector unembed_column(const Eigen::VectorXcd& u) {
  if (u.size() % 2 != 0 || u.size() == 0) throw ShapeMismatch("embedded column has odd length");
  const std::size_t n = static_cast<std::size_t>(u.size()) / 2;
  QVector v(n);
  for (std::size_t s = 0; s < n; ++s) {
    const Cplx z1 = u(static_cast<Eigen::Index>(s));
    const Cplx z2 = u(static_cast<Eigen::Index>(n + s));
    v[s] = Quaternion{z1.real(), z1.imag(), -z2.real(), z2.imag()};
  }
  return v;
}

}  // namespace detail

ComplexAdjoint to_complex_adjoint(const QMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  Eigen::MatrixXcd C(2 * m, 2 * n);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const Quaternion& q = M.at(s, t);
      const Cplx z1(q.a(), q.b());
      const Cplx z2(q.c(), q.d());
      const auto r = static_cast<Eigen::Index>(s);
      const auto c = static_cast<Eigen::Index>(t);
      const auto rm = static_cast<Eigen::Index>(s + m);
      const auto cn = static_cast<Eigen::Index>(t + n);
      C(r, c) = z1;
      C(r, cn) = z2;
      C(rm, c) = -std::conj(z2);
      C(rm, cn) = std::conj(z1);
    }
  return {std::move(C), m, n};
}

QMatrix from_complex_adjoint(const ComplexAdjoint& C) {
  const auto rows = C.mat.rows(), cols = C.mat.cols();
  if (rows % 2 != 0 || cols % 2 != 0 || rows == 0 || cols == 0)
    throw ShapeMismatch("adjoint matrix must have even dimensions");
  const std::size_t m = static_cast<std::size_t>(rows) / 2;
  const std::size_t n = static_cast<std::size_t>(cols) / 2;
  const double scale = std::max(1.0, C.mat.cwiseAbs().maxCoeff());
  QMatrix M(m, n);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto r = static_cast<Eigen::Index>(s);
      const auto c = static_cast<Eigen::Index>(t);
      const auto rm = static_cast<Eigen::Index>(s + m);
      const auto cn = static_cast<Eigen::Index>(t + n);
      const Cplx z1 = C.mat(r, c);
      const Cplx z1_dup = std::conj(C.mat(rm, cn));
      const Cplx z2 = C.mat(r, cn);
      const Cplx z2_dup = -std::conj(C.mat(rm, c));
      if (std::abs(z1 - z1_dup) > 1e-10 * scale || std::abs(z2 - z2_dup) > 1e-10 * scale)
        throw NotAdjointStructured("complex matrix violates the adjoint block symmetry");
      const Cplx w1 = 0.5 * (z1 + z1_dup);
      const Cplx w2 = 0.5 * (z2 + z2_dup);
      M.at(s, t) = Quaternion{w1.real(), w1.imag(), w2.real(), w2.imag()};
    }
  return M;
}

QVector solve(const QMatrix& A, const QVector& b) {
  require_square(A, "solve needs a square matrix");
  if (A.rows() != b.size()) throw ShapeMismatch("solve dimensions disagree");
  const auto svd = checked_svd(A);
  return detail::unembed_column(svd.solve(detail::embed_column(b)));
}

QMatrix invert(const QMatrix& A) {
  require_square(A, "invert needs a square matrix");
  const std::size_t n = A.rows();
  const auto svd = checked_svd(A);
  QMatrix out(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    // embed_column of a real basis vector is the matching complex basis vector
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(2 * static_cast<Eigen::Index>(n));
    e(static_cast<Eigen::Index>(t)) = Cplx(1.0, 0.0);
    const QVector col = detail::unembed_column(svd.solve(e));
    for (std::size_t s = 0; s < n; ++s) out.at(s, t) = col[s];
  }
  return out;
}

double condition_estimate(const QMatrix& A) {
  const ComplexAdjoint C = to_complex_adjoint(A);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(C.mat);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

std::vector<double> eigenvalues_hermitian(const QMatrix& M) {
  require_hermitian(M);
  Eigen::MatrixXcd H = to_complex_adjoint(M).mat;
  H = 0.5 * (H + H.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Singular("hermitian eigensolver failed");
  std::vector<double> out;
  out.reserve(M.rows());
  for (Eigen::Index s = 0; s < es.eigenvalues().size(); s += 2)
    out.push_back(es.eigenvalues()(s));
  return out;
}

HermitianEigensystem eigensystem_hermitian(const QMatrix& M) {
  require_hermitian(M);
  Eigen::MatrixXcd H = to_complex_adjoint(M).mat;
  H = 0.5 * (H + H.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success) throw Singular("hermitian eigensolver failed");
  HermitianEigensystem sys;
  for (Eigen::Index s = 0; s < es.eigenvalues().size(); s += 2) {
    sys.values.push_back(es.eigenvalues()(s));
    sys.vectors.push_back(detail::unembed_column(es.eigenvectors().col(s)));
  }
  return sys;
}

namespace {

bool definite_check(const QMatrix& M, const double* tol, bool strict) {
  const std::vector<double> eigs = eigenvalues_hermitian(M);
  double radius = 0.0;
  for (double e : eigs) radius = std::max(radius, std::abs(e));
  const double t = tol ? *tol : 1e-9 * std::max(1.0, radius);
  const double lam_min = eigs.front();
  return strict ? lam_min > t : lam_min >= -t;
}

}  // namespace

bool is_psd(const QMatrix& M, double tol) { return definite_check(M, &tol, false); }
bool is_psd(const QMatrix& M) { return definite_check(M, nullptr, false); }
bool is_pd(const QMatrix& M, double tol) { return definite_check(M, &tol, true); }
bool is_pd(const QMatrix& M) { return definite_check(M, nullptr, true); }

double real_bilinear(const QVector& x, const QMatrix& M, const QVector& y) {
  if (M.rows() != x.size() || M.cols() != y.size())
    throw ShapeMismatch("bilinear form dimensions disagree");
  return re(inner_h(x, matvec(M, y)));
}

}  // namespace quatopt
