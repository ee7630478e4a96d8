#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "quatopt/quaternion.hpp"
#include "quatopt/random.hpp"

using namespace quatopt;

namespace {
const Quaternion one{1.0};
const Quaternion qi = unit(Axis::I);
const Quaternion qj = unit(Axis::J);
const Quaternion qk = unit(Axis::K);
}  // namespace

TEST_CASE("hamilton product unit table") {
  CHECK(qi * qj == qk);
  CHECK(qj * qi == -qk);
  CHECK(qj * qk == qi);
  CHECK(qk * qj == -qi);
  CHECK(qk * qi == qj);
  CHECK(qi * qk == -qj);
  CHECK(qi * qi == -one);
  CHECK(qj * qj == -one);
  CHECK(qk * qk == -one);
}

TEST_CASE("product identity and distributivity case") {
  const Quaternion q{0.3, -1.2, 4.0, 0.5};
  CHECK(q * one == q);
  CHECK(one * q == q);
  // (1 + i)(1 + j) = 1 + i + j + k
  CHECK(Quaternion{1, 1, 0, 0} * Quaternion{1, 0, 1, 0} == Quaternion{1, 1, 1, 1});
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Quaternion{1, 2, 3, 4}) == Quaternion{1, -2, -3, -4});
  CHECK(conjugate(Quaternion{2.5}) == Quaternion{2.5});
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
    CHECK(conjugate(conjugate(q)) == q);
    CHECK(norm(conjugate(p * q) - conjugate(q) * conjugate(p)) < 1e-14);
  }
}

TEST_CASE("rotation") {
  const Quaternion q{1, 2, 3, 4};
  CHECK(norm(rotate(q, qi) - Quaternion{1, 2, -3, -4}) < 1e-15);
  CHECK(norm(rotate(q, one) - q) < 1e-15);
  CHECK(norm(rotate(q, q) - q) < 1e-14);
  CHECK_THROWS_AS(rotate(q, Quaternion{}), ZeroRotator);
  // real scaling of the rotator cancels
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Quaternion p = random_quaternion(rng);
    Quaternion mu = random_quaternion(rng);
    if (mu.is_zero()) continue;
    CHECK(norm(rotate(p, mu) - rotate(p, Quaternion{2.0} * mu)) < 1e-13);
  }
}

TEST_CASE("involutions") {
  const Quaternion q{1, 2, 3, 4};
  CHECK(involution(q, Axis::J) == Quaternion{1, -2, 3, -4});
  CHECK(involution(q, Axis::One) == q);
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Quaternion p = random_quaternion(rng);
    for (Axis axis : {Axis::One, Axis::I, Axis::J, Axis::K}) {
      CHECK(involution(involution(p, axis), axis) == p);
      CHECK(norm(involution(p, axis) - rotate(p, unit(axis))) < 1e-15);
    }
  }
}

TEST_CASE("norm and inverse") {
  CHECK(norm(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0));
  CHECK(norm(inverse(qi) + qi) == 0.0);
  CHECK(inverse(Quaternion{2.0}) == Quaternion{0.5});
  CHECK_THROWS_AS(inverse(Quaternion{}), ZeroDivisor);
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_quaternion(rng);
    if (norm(q) < 1e-6) continue;
    CHECK(norm(q * inverse(q) - one) < 1e-13);
  }
}

TEST_CASE("rotation properties over random draws") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
    Quaternion mu = random_quaternion(rng), nu = random_quaternion(rng);
    if (mu.is_zero() || nu.is_zero()) continue;
    CHECK(norm(rotate(p * q, mu) - rotate(p, mu) * rotate(q, mu)) < 1e-12);
    CHECK(norm(rotate(rotate(q, nu), mu) - rotate(q, mu * nu)) < 1e-12);
    CHECK(norm(conjugate(rotate(q, mu)) - rotate(conjugate(q), mu)) < 1e-12);
    CHECK(std::abs(norm(p * q) - norm(p) * norm(q)) < 1e-12 * (1.0 + norm(p) * norm(q)));
    const Quaternion avg =
        (q + involution(q, Axis::I) + involution(q, Axis::J) + involution(q, Axis::K)) / 4.0;
    CHECK(norm(avg - Quaternion{re(q)}) < 1e-12);
  }
}

TEST_CASE("constructors reject non-finite components") {
  CHECK_THROWS_AS(Quaternion(std::nan(""), 0, 0, 0), NonFiniteValue);
  CHECK_THROWS_AS(Quaternion(0, std::numeric_limits<double>::infinity(), 0, 0), NonFiniteValue);
  // overflow in arithmetic surfaces rather than propagating
  const Quaternion big{1e308};
  CHECK_THROWS_AS(big + big, NonFiniteValue);
}

TEST_CASE("real and imaginary parts") {
  const Quaternion q{1, 2, 3, 4};
  CHECK(re(q) == 1.0);
  CHECK(im(q) == Quaternion{0, 2, 3, 4});
}
