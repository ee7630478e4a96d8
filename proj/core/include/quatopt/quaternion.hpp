#pragma once

#include <cmath>
#include <ostream>

#include "quatopt/errors.hpp"

namespace quatopt {

// Basis units {1, i, j, k}. The three imaginary axes double as the
// self-inverse involutions q -> -axis * q * axis.
enum class Axis { One, I, J, K };

// Quaternion scalar q = a + b*i + c*j + d*k stored as four doubles.
// Constructors reject NaN/Inf, so every value flowing through the library
// is finite by construction and overflow surfaces as NonFiniteValue instead
// of silently propagating.
class Quaternion {
 public:
  constexpr Quaternion() = default;
  Quaternion(double real) : a_(real) { check_finite(); }
  Quaternion(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    check_finite();
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  bool is_zero() const { return a_ == 0.0 && b_ == 0.0 && c_ == 0.0 && d_ == 0.0; }

  Quaternion& operator+=(const Quaternion& o) {
    a_ += o.a_; b_ += o.b_; c_ += o.c_; d_ += o.d_;
    check_finite();
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    a_ -= o.a_; b_ -= o.b_; c_ -= o.c_; d_ -= o.d_;
    check_finite();
    return *this;
  }
  // Hamilton product: i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i,
  // ki = -ik = j. Non-commutative.
  Quaternion& operator*=(const Quaternion& o) {
    const double a = a_ * o.a_ - b_ * o.b_ - c_ * o.c_ - d_ * o.d_;
    const double b = a_ * o.b_ + b_ * o.a_ + c_ * o.d_ - d_ * o.c_;
    const double c = a_ * o.c_ - b_ * o.d_ + c_ * o.a_ + d_ * o.b_;
    const double d = a_ * o.d_ + b_ * o.c_ - c_ * o.b_ + d_ * o.a_;
    a_ = a; b_ = b; c_ = c; d_ = d;
    check_finite();
    return *this;
  }
  Quaternion& operator/=(double s) {
    a_ /= s; b_ /= s; c_ /= s; d_ /= s;
    check_finite();
    return *this;
  }

  friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) { return lhs += rhs; }
  friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) { return lhs -= rhs; }
  friend Quaternion operator*(Quaternion lhs, const Quaternion& rhs) { return lhs *= rhs; }
  friend Quaternion operator/(Quaternion lhs, double s) { return lhs /= s; }
  friend Quaternion operator-(const Quaternion& q) {
    return {-q.a_, -q.b_, -q.c_, -q.d_};
  }
  friend bool operator==(const Quaternion& l, const Quaternion& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }
  friend bool operator!=(const Quaternion& l, const Quaternion& r) { return !(l == r); }

 private:
  void check_finite() const {
    if (!(std::isfinite(a_) && std::isfinite(b_) && std::isfinite(c_) && std::isfinite(d_)))
      throw NonFiniteValue("quaternion component is not finite");
  }

  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

inline Quaternion unit(Axis axis) {
  switch (axis) {
    case Axis::One: return {1.0, 0.0, 0.0, 0.0};
    case Axis::I: return {0.0, 1.0, 0.0, 0.0};
    case Axis::J: return {0.0, 0.0, 1.0, 0.0};
    case Axis::K: return {0.0, 0.0, 0.0, 1.0};
  }
  throw Error("unreachable axis");
}

inline double re(const Quaternion& q) { return q.a(); }

inline Quaternion im(const Quaternion& q) { return {0.0, q.b(), q.c(), q.d()}; }

inline Quaternion conjugate(const Quaternion& q) { return {q.a(), -q.b(), -q.c(), -q.d()}; }

inline double norm_sq(const Quaternion& q) {
  return q.a() * q.a() + q.b() * q.b() + q.c() * q.c() + q.d() * q.d();
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline Quaternion inverse(const Quaternion& q) {
  if (q.is_zero()) throw ZeroDivisor("inverse of zero quaternion");
  const double n2 = norm_sq(q);
  return {q.a() / n2, -q.b() / n2, -q.c() / n2, -q.d() / n2};
}

// mu q mu^{-1}, computed literally for any nonzero mu (no normalization).
inline Quaternion rotate(const Quaternion& q, const Quaternion& mu) {
  if (mu.is_zero()) throw ZeroRotator("rotation by zero quaternion");
  return mu * q * inverse(mu);
}

// Closed-form involutions: the two imaginary parts orthogonal to the axis
// flip sign; Axis::One is the identity. Agrees with rotate(q, unit(axis)).
inline Quaternion involution(const Quaternion& q, Axis axis) {
  switch (axis) {
    case Axis::One: return q;
    case Axis::I: return {q.a(), q.b(), -q.c(), -q.d()};
    case Axis::J: return {q.a(), -q.b(), q.c(), -q.d()};
    case Axis::K: return {q.a(), -q.b(), -q.c(), q.d()};
  }
  throw Error("unreachable axis");
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.a() << ", " << q.b() << ", " << q.c() << ", " << q.d() << ')';
}

}  // namespace quatopt
