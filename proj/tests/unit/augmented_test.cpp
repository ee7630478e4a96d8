#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "quatopt/augmented.hpp"
#include "quatopt/ghr.hpp"
#include "quatopt/random.hpp"

using namespace quatopt;

TEST_CASE("stacking conventions") {
  const QVector q{Quaternion{1, 2, 3, 4}};
  const Eigen::VectorXd r = to_aug_real(q);
  CHECK(r.size() == 4);
  CHECK(r(0) == 1.0);
  CHECK(r(1) == 2.0);
  CHECK(r(2) == 3.0);
  CHECK(r(3) == 4.0);

  // real vectors have all four involution blocks equal
  const QVector real_q{Quaternion{2.5}, Quaternion{-1.0}};
  const QVector h = to_aug_quat(real_q);
  for (std::size_t u = 1; u < 4; ++u)
    for (std::size_t s = 0; s < 2; ++s) CHECK(h[u * 2 + s] == real_q[s]);

  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const QVector v = random_qvector(3, rng);
    CHECK(norm(sub(from_aug_real(to_aug_real(v)), v)) == 0.0);
    CHECK(norm(sub(from_aug_quat(to_aug_quat(v)), v)) == 0.0);
  }
  CHECK(aug_structure_violation(to_aug_quat(random_qvector(2, rng))) == 0.0);
  CHECK_THROWS_AS(from_aug_quat(random_qvector(8, rng)), ShapeMismatch);
  CHECK_THROWS_AS(from_aug_real(Eigen::VectorXd::Zero(6)), ShapeMismatch);
}

TEST_CASE("bridge matrix layout and identities") {
  const QMatrix J1 = j_matrix(1);
  CHECK(J1.at(0, 0) == Quaternion{1});
  CHECK(J1.at(0, 1) == unit(Axis::I));
  CHECK(J1.at(0, 2) == unit(Axis::J));
  CHECK(J1.at(0, 3) == unit(Axis::K));

  CHECK(max_abs(sub(matmul(hermitian_transpose(J1), J1), scale(4.0, QMatrix::identity(4)))) ==
        0.0);

  Rng rng(3);
  for (std::size_t n : {1u, 2u, 5u}) {
    const QMatrix J = j_matrix(n);
    CHECK(max_abs(sub(matmul(hermitian_transpose(J), J),
                      scale(4.0, QMatrix::identity(4 * n)))) == 0.0);
    const QVector q = random_qvector(n, rng);
    QVector qr(4 * n);
    const Eigen::VectorXd r = to_aug_real(q);
    for (std::size_t s = 0; s < 4 * n; ++s) qr[s] = Quaternion{r(static_cast<Eigen::Index>(s))};
    CHECK(norm(sub(matvec(J, qr), to_aug_quat(q))) < 1e-13);
    CHECK(norm(sub(matvec(scale(0.25, hermitian_transpose(J)), to_aug_quat(q)), qr)) < 1e-13);
  }
}

TEST_CASE("augmented inner identities") {
  const QVector e1 = QVector::basis(1, 0);
  CHECK(aug_inner(e1, e1).herm == doctest::Approx(4.0));
  CHECK(aug_inner(QVector{unit(Axis::I)}, QVector{unit(Axis::J)}).herm == doctest::Approx(0.0));

  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const AugmentedInner rpt = aug_inner(random_qvector(n, rng), random_qvector(n, rng));
    CHECK(rpt.max_violation() < 1e-12 * (1.0 + std::abs(rpt.herm)));
  }
  CHECK_THROWS_AS(aug_inner(QVector(2), QVector(3)), ShapeMismatch);
}

TEST_CASE("hessian assembly from first-row blocks") {
  // (I/2, O, O, O) assembles to I/2 on the full augmented space
  const std::size_t n = 2;
  const std::array<QMatrix, 4> blocks{scale(0.5, QMatrix::identity(n)), QMatrix(n, n),
                                      QMatrix(n, n), QMatrix(n, n)};
  const QMatrix H = assemble_aug_hessian(blocks);
  CHECK(max_abs(sub(H, scale(0.5, QMatrix::identity(4 * n)))) == 0.0);

  const std::array<QMatrix, 4> zeros{QMatrix(n, n), QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
  CHECK(max_abs(assemble_aug_hessian(zeros)) == 0.0);

  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const QuadraticObjective obj(random_hermitian(3, rng), QVector(3), 0.0);
    CHECK(hermitian_deviation(obj.aug_hessian()) < 1e-10);
  }

  CHECK_THROWS_AS(
      assemble_aug_hessian({QMatrix(2, 2), QMatrix(3, 3), QMatrix(2, 2), QMatrix(2, 2)}),
      ShapeMismatch);
}

TEST_CASE("real hessian bridge") {
  // H = I/2 maps to H_RR = 2I
  const QMatrix H = scale(0.5, QMatrix::identity(4));
  const Eigen::MatrixXd Hrr = to_real_hessian(H);
  CHECK((Hrr - 2.0 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);

  CHECK(to_real_hessian(QMatrix(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const QMatrix Hq = QuadraticObjective(random_hermitian(2, rng), QVector(2), 0.0).aug_hessian();
    CHECK(max_abs(sub(from_real_hessian(to_real_hessian(Hq)), Hq)) < 1e-9);
  }

  // an unstructured matrix leaves imaginary residue behind
  QMatrix garbage(4, 4);
  garbage.at(0, 0) = unit(Axis::I);
  CHECK_THROWS_AS(to_real_hessian(garbage), NotRealResult);
}

TEST_CASE("bridge matches the finite-difference real hessian") {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 1 + rng() % 2;
    const QuadraticObjective obj(random_hermitian(n, rng), random_qvector(n, rng), 0.5);
    const auto f_real = [&](const Eigen::VectorXd& x) { return obj.evaluate(from_aug_real(x)); };
    const Eigen::MatrixXd via_bridge = to_real_hessian(obj.aug_hessian());
    const Eigen::MatrixXd via_fd =
        oracles::fd_hessian(f_real, to_aug_real(random_qvector(n, rng)), 1e-2);
    CHECK((via_bridge - via_fd).cwiseAbs().maxCoeff() < 1e-5);
  }
}

TEST_CASE("gradient transport identities on random quadratics") {
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const QuadraticObjective obj(random_hermitian(n, rng), random_qvector(n, rng), 0.0);
    const QVector p = random_qvector(n, rng), q = random_qvector(n, rng);
    const auto f_real = [&](const Eigen::VectorXd& x) { return obj.evaluate(from_aug_real(x)); };
    const Eigen::VectorXd pr = to_aug_real(p);
    const Eigen::VectorXd grad_r =
        oracles::fd_gradient(f_real, pr, 1e-3 * std::max(1.0, pr.cwiseAbs().maxCoeff()));
    const QVector g = obj.gradient_conjugate(p);

    // grad_R = 4 * aug_real(grad_conj) for real objectives
    CHECK((grad_r - 4.0 * to_aug_real(g)).cwiseAbs().maxCoeff() < 1e-9);
    // pairing: grad_R(p)^T q_R = 4 Re{grad(p)^H q}
    CHECK(std::abs(grad_r.dot(to_aug_real(q)) - 4.0 * re(inner_h(g, q))) < 1e-9);
    // norms: ||grad_R|| = 2 ||grad_H|| = 4 ||grad_q||
    CHECK(std::abs(grad_r.norm() - 4.0 * norm(g)) < 1e-9);
    CHECK(std::abs(grad_r.norm() - 2.0 * norm(to_aug_quat(g))) < 1e-9);
  }
}

TEST_CASE("augmented quadratic form identity") {
  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const QuadraticObjective obj(random_hermitian(n, rng), QVector(n), 0.0);
    const QVector x = random_qvector(n, rng);
    const QVector xh = to_aug_quat(x);
    const double lhs = re(inner_h(xh, matvec(obj.aug_hessian(), xh)));
    const std::array<QMatrix, 4> blocks = obj.hessian_blocks();
    double rhs = 0.0;
    const std::array<Axis, 4> axes{Axis::One, Axis::I, Axis::J, Axis::K};
    for (std::size_t u = 0; u < 4; ++u) {
      QVector xu(n);
      for (std::size_t s = 0; s < n; ++s) xu[s] = involution(x[s], axes[u]);
      rhs += re(inner_h(x, matvec(blocks[u], xu)));
    }
    CHECK(std::abs(lhs - 4.0 * rhs) < 1e-9 * (1.0 + std::abs(lhs)));
  }
}
