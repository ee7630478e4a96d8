#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "quatopt/quaternion.hpp"

namespace quatopt {

// Dense quaternion vector. Always non-empty; entries are finite because
// Quaternion enforces it.
class QVector {
 public:
  explicit QVector(std::size_t n) : e_(checked(n)) {}
  QVector(std::initializer_list<Quaternion> entries) : e_(entries) {
    if (e_.empty()) throw ShapeMismatch("vector length must be positive");
  }

  static QVector basis(std::size_t n, std::size_t index);

  std::size_t size() const { return e_.size(); }
  Quaternion& operator[](std::size_t s) { return e_[s]; }
  const Quaternion& operator[](std::size_t s) const { return e_[s]; }

  auto begin() { return e_.begin(); }
  auto end() { return e_.end(); }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

 private:
  static std::vector<Quaternion> checked(std::size_t n) {
    if (n == 0) throw ShapeMismatch("vector length must be positive");
    return std::vector<Quaternion>(n);
  }
  std::vector<Quaternion> e_;
};

// Dense row-major quaternion matrix.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw ShapeMismatch("matrix dimensions must be positive");
    e_.assign(rows * cols, Quaternion{});
  }
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Quaternion& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Quaternion& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Quaternion> e_;
};

QVector add(const QVector& x, const QVector& y);
QVector sub(const QVector& x, const QVector& y);
QVector scale(double s, const QVector& x);
QVector scale_left(const Quaternion& s, const QVector& x);   // s * x_u
QVector scale_right(const QVector& x, const Quaternion& s);  // x_u * s
QVector conjugate(const QVector& x);

QMatrix add(const QMatrix& A, const QMatrix& B);
QMatrix sub(const QMatrix& A, const QMatrix& B);
QMatrix scale(double s, const QMatrix& A);
QMatrix scale_right(const QMatrix& A, const Quaternion& s);

// Hamilton products accumulate left-to-right: C_st = sum_u A_su * B_ut.
QMatrix matmul(const QMatrix& A, const QMatrix& B);
QVector matvec(const QMatrix& A, const QVector& x);

QMatrix hermitian_transpose(const QMatrix& M);
QMatrix outer_conj(const QVector& x, const QVector& y);  // x y^H

Quaternion inner_t(const QVector& p, const QVector& q);  // p^T q, no conjugation
Quaternion inner_h(const QVector& p, const QVector& q);  // p^H q

double norm_sq(const QVector& x);
double norm(const QVector& x);
double max_abs_component(const QVector& x);  // max |real component|

double max_abs(const QMatrix& M);
double frobenius_norm(const QMatrix& M);
// max entry norm of M - M^H; zero iff Hermitian.
double hermitian_deviation(const QMatrix& M);

QMatrix principal_submatrix(const QMatrix& M, const std::vector<std::size_t>& indices);
QVector column(const QMatrix& M, std::size_t t);
QMatrix as_column(const QVector& x);

inline QVector operator+(const QVector& x, const QVector& y) { return add(x, y); }
inline QVector operator-(const QVector& x, const QVector& y) { return sub(x, y); }
inline QVector operator*(double s, const QVector& x) { return scale(s, x); }
inline QMatrix operator+(const QMatrix& A, const QMatrix& B) { return add(A, B); }
inline QMatrix operator-(const QMatrix& A, const QMatrix& B) { return sub(A, B); }
inline QMatrix operator*(double s, const QMatrix& A) { return scale(s, A); }
inline QMatrix operator*(const QMatrix& A, const QMatrix& B) { return matmul(A, B); }
inline QVector operator*(const QMatrix& A, const QVector& x) { return matvec(A, x); }

}  // namespace quatopt
