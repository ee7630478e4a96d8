#include "quatopt/qmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace quatopt {

namespace {

void require_same_size(const QVector& x, const QVector& y) {
  if (x.size() != y.size()) throw ShapeMismatch("vector sizes differ");
}

void require_same_shape(const QMatrix& A, const QMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw ShapeMismatch("matrix shapes differ");
}

}  // namespace

QVector QVector::basis(std::size_t n, std::size_t index) {
  QVector e(n);
  if (index >= n) throw ShapeMismatch("basis index out of range");
  e[index] = Quaternion{1.0};
  return e;
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw ShapeMismatch("matrix dimensions must be positive");
  e_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeMismatch("ragged matrix initializer");
    e_.insert(e_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix I(n, n);
  for (std::size_t s = 0; s < n; ++s) I.at(s, s) = Quaternion{1.0};
  return I;
}

QVector add(const QVector& x, const QVector& y) {
  require_same_size(x, y);
  QVector out(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) out[s] = x[s] + y[s];
  return out;
}

QVector sub(const QVector& x, const QVector& y) {
  require_same_size(x, y);
  QVector out(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) out[s] = x[s] - y[s];
  return out;
}

QVector scale(double s, const QVector& x) {
  QVector out(x.size());
  for (std::size_t u = 0; u < x.size(); ++u) out[u] = Quaternion{s} * x[u];
  return out;
}

QVector scale_left(const Quaternion& s, const QVector& x) {
  QVector out(x.size());
  for (std::size_t u = 0; u < x.size(); ++u) out[u] = s * x[u];
  return out;
}

QVector scale_right(const QVector& x, const Quaternion& s) {
  QVector out(x.size());
  for (std::size_t u = 0; u < x.size(); ++u) out[u] = x[u] * s;
  return out;
}

QVector conjugate(const QVector& x) {
  QVector out(x.size());
  for (std::size_t u = 0; u < x.size(); ++u) out[u] = conjugate(x[u]);
  return out;
}

QMatrix add(const QMatrix& A, const QMatrix& B) {
  require_same_shape(A, B);
  QMatrix out(A.rows(), A.cols());
  for (std::size_t s = 0; s < A.rows(); ++s)
    for (std::size_t t = 0; t < A.cols(); ++t) out.at(s, t) = A.at(s, t) + B.at(s, t);
  return out;
}

QMatrix sub(const QMatrix& A, const QMatrix& B) {
  require_same_shape(A, B);
  QMatrix out(A.rows(), A.cols());
  for (std::size_t s = 0; s < A.rows(); ++s)
    for (std::size_t t = 0; t < A.cols(); ++t) out.at(s, t) = A.at(s, t) - B.at(s, t);
  return out;
}

QMatrix scale(double s, const QMatrix& A) {
  QMatrix out(A.rows(), A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t t = 0; t < A.cols(); ++t) out.at(r, t) = Quaternion{s} * A.at(r, t);
  return out;
}

QMatrix scale_right(const QMatrix& A, const Quaternion& s) {
  QMatrix out(A.rows(), A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t t = 0; t < A.cols(); ++t) out.at(r, t) = A.at(r, t) * s;
  return out;
}

QMatrix matmul(const QMatrix& A, const QMatrix& B) {
  if (A.cols() != B.rows()) throw ShapeMismatch("inner matrix dimensions disagree");
  QMatrix out(A.rows(), B.cols());
  for (std::size_t s = 0; s < A.rows(); ++s)
    for (std::size_t u = 0; u < A.cols(); ++u) {
      const Quaternion& a = A.at(s, u);
      if (a.is_zero()) continue;
      for (std::size_t t = 0; t < B.cols(); ++t) out.at(s, t) += a * B.at(u, t);
    }
  return out;
}

QVector matvec(const QMatrix& A, const QVector& x) {
  if (A.cols() != x.size()) throw ShapeMismatch("matrix/vector dimensions disagree");
  QVector out(A.rows());
  for (std::size_t s = 0; s < A.rows(); ++s) {
    Quaternion acc;
    for (std::size_t u = 0; u < A.cols(); ++u) acc += A.at(s, u) * x[u];
    out[s] = acc;
  }
  return out;
}

QMatrix hermitian_transpose(const QMatrix& M) {
  QMatrix out(M.cols(), M.rows());
  for (std::size_t s = 0; s < M.rows(); ++s)
    for (std::size_t t = 0; t < M.cols(); ++t) out.at(t, s) = conjugate(M.at(s, t));
  return out;
}

QMatrix outer_conj(const QVector& x, const QVector& y) {
  QMatrix out(x.size(), y.size());
  for (std::size_t s = 0; s < x.size(); ++s)
    for (std::size_t t = 0; t < y.size(); ++t) out.at(s, t) = x[s] * conjugate(y[t]);
  return out;
}

Quaternion inner_t(const QVector& p, const QVector& q) {
  require_same_size(p, q);
  Quaternion acc;
  for (std::size_t s = 0; s < p.size(); ++s) acc += p[s] * q[s];
  return acc;
}

Quaternion inner_h(const QVector& p, const QVector& q) {
  require_same_size(p, q);
  Quaternion acc;
  for (std::size_t s = 0; s < p.size(); ++s) acc += conjugate(p[s]) * q[s];
  return acc;
}

double norm_sq(const QVector& x) {
  double acc = 0.0;
  for (const auto& e : x) acc += norm_sq(e);
  return acc;
}

double norm(const QVector& x) { return std::sqrt(norm_sq(x)); }

double max_abs_component(const QVector& x) {
  double m = 0.0;
  for (const auto& e : x)
    m = std::max({m, std::abs(e.a()), std::abs(e.b()), std::abs(e.c()), std::abs(e.d())});
  return m;
}

double max_abs(const QMatrix& M) {
  double m = 0.0;
  for (std::size_t s = 0; s < M.rows(); ++s)
    for (std::size_t t = 0; t < M.cols(); ++t) m = std::max(m, norm(M.at(s, t)));
  return m;
}

double frobenius_norm(const QMatrix& M) {
  double acc = 0.0;
  for (std::size_t s = 0; s < M.rows(); ++s)
    for (std::size_t t = 0; t < M.cols(); ++t) acc += norm_sq(M.at(s, t));
  return std::sqrt(acc);
}

double hermitian_deviation(const QMatrix& M) {
  if (M.rows() != M.cols()) throw ShapeMismatch("hermitian deviation needs a square matrix");
  double dev = 0.0;
  for (std::size_t s = 0; s < M.rows(); ++s)
    for (std::size_t t = 0; t < M.cols(); ++t)
      dev = std::max(dev, norm(M.at(s, t) - conjugate(M.at(t, s))));
  return dev;
}

QMatrix principal_submatrix(const QMatrix& M, const std::vector<std::size_t>& indices) {
  if (M.rows() != M.cols()) throw ShapeMismatch("principal submatrix needs a square matrix");
  if (indices.empty()) throw ShapeMismatch("index set must be non-empty");
  QMatrix out(indices.size(), indices.size());
  for (std::size_t s = 0; s < indices.size(); ++s)
    for (std::size_t t = 0; t < indices.size(); ++t) {
      if (indices[s] >= M.rows() || indices[t] >= M.cols())
        throw ShapeMismatch("submatrix index out of range");
      out.at(s, t) = M.at(indices[s], indices[t]);
    }
  return out;
}

QVector column(const QMatrix& M, std::size_t t) {
  if (t >= M.cols()) throw ShapeMismatch("column index out of range");
  QVector out(M.rows());
  for (std::size_t s = 0; s < M.rows(); ++s) out[s] = M.at(s, t);
  return out;
}

QMatrix as_column(const QVector& x) {
  QMatrix out(x.size(), 1);
  for (std::size_t s = 0; s < x.size(); ++s) out.at(s, 0) = x[s];
  return out;
}

}  // namespace quatopt
