#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "quatopt/optimize.hpp"
#include "quatopt/random.hpp"

using namespace quatopt;

TEST_CASE("wiener solve") {
  Rng rng(1);
  const std::size_t n = 3;
  const QVector p = random_qvector(n, rng);
  const SolveResult id = wiener_solve(QMatrix::identity(n), p);
  CHECK(norm(sub(id.q_opt, p)) < 1e-12);
  CHECK(id.iterations == 0);

  const SolveResult scalar = wiener_solve(QMatrix{{Quaternion{2}}}, QVector{Quaternion{1, 1, 0, 0}});
  CHECK(norm(scalar.q_opt[0] - Quaternion{0.5, 0.5, 0, 0}) < 1e-14);

  const QMatrix R = random_pd(n, rng);
  const QVector rhs = random_qvector(n, rng);
  const SolveResult res = wiener_solve(R, rhs);
  CHECK(res.gradient_residual <= 1e-8 * (1.0 + norm(rhs)));
  CHECK(norm(scale(0.5, sub(matvec(R, res.q_opt), rhs))) ==
        doctest::Approx(res.gradient_residual));

  QMatrix indef(2, 2);
  indef.at(0, 0) = Quaternion{1};
  indef.at(1, 1) = Quaternion{-1};
  CHECK_THROWS_AS(wiener_solve(indef, QVector(2)), NotPD);
  CHECK_THROWS_AS(wiener_solve(QMatrix(2, 2), QVector(2)), NotPD);
}

TEST_CASE("affine projection closed form") {
  Rng rng(3);
  const std::size_t n = 4, p = 2;
  const QMatrix A = random_qmatrix(p, n, rng);
  const QVector b = random_qvector(p, rng);

  // feasible points are fixed
  const SolveResult base = affine_projection(A, b, random_qvector(n, rng));
  const SolveResult again = affine_projection(A, b, base.q_opt);
  CHECK(norm(sub(again.q_opt, base.q_opt)) < 1e-10);

  // real coordinate row [1, 0] zeroes the first entry
  QMatrix row(1, 2);
  row.at(0, 0) = Quaternion{1};
  const QVector y{Quaternion{2, -1, 0.5, 3}, Quaternion{-1, 2, 0, 1}};
  const SolveResult coord = affine_projection(row, QVector{Quaternion{}}, y);
  CHECK(norm(coord.q_opt[0]) < 1e-13);
  CHECK(norm(coord.q_opt[1] - y[1]) < 1e-13);

  // constraint satisfied, displacement in range(A^H), multiplier reconstruction
  const QVector anchor = random_qvector(n, rng);
  const SolveResult proj = affine_projection(A, b, anchor);
  CHECK(*proj.constraint_residual < 1e-10 * (1.0 + norm(b)));
  CHECK(proj.gradient_residual < 1e-8);
  const QMatrix Ah = hermitian_transpose(A);
  const QVector lam = scale(2.0, solve(matmul(A, Ah), sub(matvec(A, anchor), b)));
  CHECK(norm(sub(sub(anchor, scale(0.5, matvec(Ah, lam))), proj.q_opt)) < 1e-9);

  // projection is the nearest feasible point among sampled candidates
  Rng sampler(5);
  for (int t = 0; t < 1000; ++t) {
    const QVector fz = affine_projection(A, b, random_qvector(n, sampler)).q_opt;
    CHECK(norm(sub(proj.q_opt, anchor)) <= norm(sub(fz, anchor)) + 1e-9);
  }

  CHECK_THROWS_AS(affine_projection(random_qmatrix(3, 3, rng), QVector(3), QVector(3)),
                  RankDeficient);
  QMatrix dup(2, 4);
  for (std::size_t t = 0; t < 4; ++t) dup.at(0, t) = dup.at(1, t) = Quaternion{1};
  CHECK_THROWS_AS(affine_projection(dup, QVector(2), QVector(4)), RankDeficient);
}

TEST_CASE("mvdr beamformer") {
  Rng rng(7);
  const std::size_t n = 3;
  const QVector a = random_qvector(n, rng);

  const SolveResult id = mvdr_beamform(QMatrix::identity(n), a);
  CHECK(norm(sub(id.q_opt, scale(1.0 / norm_sq(a), a))) < 1e-12);

  const SolveResult e1 = mvdr_beamform(QMatrix::identity(n), QVector::basis(n, 0));
  CHECK(norm(sub(e1.q_opt, QVector::basis(n, 0))) < 1e-13);
  CHECK(e1.objective_value == doctest::Approx(1.0));

  const QMatrix R = random_pd(n, rng);
  const SolveResult w = mvdr_beamform(R, a);
  CHECK(*w.constraint_residual < 1e-12);
  // lambda = 1 / (a^H R^{-1} a) is real positive and reproduces the weights
  const QVector Ria = solve(R, a);
  const Quaternion denom = inner_h(a, Ria);
  CHECK(norm(im(denom)) < 1e-10 * std::abs(re(denom)));
  CHECK(re(denom) > 0.0);
  CHECK(norm(sub(w.q_opt, scale(1.0 / re(denom), Ria))) < 1e-10);

  // sampled feasible perturbations never beat the optimum
  Rng sampler(11);
  for (int t = 0; t < 1000; ++t) {
    QVector z = random_qvector(n, sampler);
    const Quaternion coeff = inner_h(a, z) / norm_sq(a);
    z = sub(z, scale_right(a, coeff));  // now a^H z = 0
    const QVector w_feasible = add(w.q_opt, z);
    CHECK(re(inner_h(w_feasible, matvec(R, w_feasible))) >= w.objective_value - 1e-9);
  }

  CHECK_THROWS_AS(mvdr_beamform(QMatrix::identity(2), QVector(2)), ZeroSteering);
  QMatrix indef(2, 2);
  indef.at(0, 0) = Quaternion{1};
  indef.at(1, 1) = Quaternion{-1};
  CHECK_THROWS_AS(mvdr_beamform(indef, QVector::basis(2, 0)), NotPD);
}

TEST_CASE("gradient descent mechanics") {
  const std::size_t n = 2;
  const QuadraticObjective sq(QMatrix::identity(n), QVector(n), 0.0);
  Rng rng(13);
  const QVector q0 = random_qvector(n, rng);

  // one unit step halves the iterate: q1 = q0 - 1 * q0/2
  const SolveResult one = gradient_descent(sq, q0, 1.0, 1e-300, 1);
  CHECK(one.iterations == 1);
  CHECK(norm(sub(one.q_opt, scale(0.5, q0))) < 1e-13);

  // starting at the stationary point terminates immediately
  const QMatrix R = random_pd(n, rng);
  const QVector p = random_qvector(n, rng);
  const QuadraticObjective obj(R, p, 0.0);
  const SolveResult at_opt = gradient_descent(obj, solve(R, p), safe_step(obj), 1e-8, 1000);
  CHECK(at_opt.iterations == 0);

  // converges to the closed-form filter solution
  const SolveResult digd = gradient_descent(obj, q0, safe_step(obj), 1e-10, 100000);
  CHECK(norm(sub(digd.q_opt, wiener_solve(R, p).q_opt)) < 1e-6);

  // objective values never increase along the safe-step trajectory
  double prev = std::numeric_limits<double>::infinity();
  bool monotone = true;
  gradient_descent(obj, q0, safe_step(obj), 1e-10, 100000,
                   [&](int, const QVector&, double f, double) {
                     if (f > prev + 1e-12 * (1.0 + std::abs(prev))) monotone = false;
                     prev = f;
                   });
  CHECK(monotone);

  QMatrix indef(2, 2);
  indef.at(0, 0) = Quaternion{1};
  indef.at(1, 1) = Quaternion{-1};
  CHECK_THROWS_AS(gradient_descent(QuadraticObjective(indef, QVector(2), 0.0), q0, 0.1, 1e-8, 10),
                  NotCertifiedConvex);
  CHECK_THROWS_AS(gradient_descent(sq, q0, 10.0, 1e-300, 100000), Diverged);
  CHECK_THROWS_AS(gradient_descent(sq, q0, -1.0, 1e-8, 10), std::invalid_argument);
}

TEST_CASE("projected gradient matches the closed-form projection") {
  Rng rng(17);
  const std::size_t n = 4, m = 2;
  const QMatrix A = random_qmatrix(m, n, rng);
  const QVector b = random_qvector(m, rng);
  const QVector y = random_qvector(n, rng);

  // objective ||q - y||^2
  const ConstrainedQP prob{QuadraticObjective(QMatrix::identity(n), y, norm_sq(y)), A, b};
  const SolveResult pg = projected_gradient(prob, random_qvector(n, rng), 1.0, 1e-10, 100000);
  const SolveResult cf = affine_projection(A, b, y);
  CHECK(norm(sub(pg.q_opt, cf.q_opt)) < 1e-6);
  CHECK(*pg.constraint_residual < 1e-10 * (1.0 + norm(b)));

  // a feasible optimum terminates immediately
  const SolveResult warm = projected_gradient(prob, cf.q_opt, 1.0, 1e-7, 1000);
  CHECK(warm.iterations == 0);
}

TEST_CASE("projected gradient reproduces the beamformer") {
  Rng rng(19);
  const std::size_t n = 3;
  const QMatrix R = random_pd(n, rng);
  const QVector a = random_qvector(n, rng);
  // w^H a = 1 written as the single quaternion row a^H w = 1
  QMatrix Arow(1, n);
  for (std::size_t t = 0; t < n; ++t) Arow.at(0, t) = conjugate(a[t]);
  const ConstrainedQP prob{QuadraticObjective(R, QVector(n), 0.0), Arow,
                           QVector{Quaternion{1}}};
  const SolveResult pg = projected_gradient(prob, random_qvector(n, rng), safe_step(prob.objective),
                                            1e-10, 200000);
  const SolveResult cf = mvdr_beamform(R, a);
  CHECK(norm(sub(pg.q_opt, cf.q_opt)) < 1e-5);
  CHECK(std::abs(pg.objective_value - cf.objective_value) < 1e-5);
}

TEST_CASE("multi-start probe collapses for strongly convex problems") {
  Rng rng(23);
  const std::size_t n = 3;
  const ConstrainedQP prob{QuadraticObjective(random_pd(n, rng), random_qvector(n, rng), 0.0),
                           {}, {}};
  const ProbeReport probe = local_global_probe(prob, 10, 29);
  CHECK(probe.runs.size() == 10);
  CHECK(probe.max_pairwise_distance < 1e-5);
  CHECK(probe.objective_spread < 1e-5);

  const ProbeReport single = local_global_probe(prob, 1, 31);
  CHECK(single.max_pairwise_distance == 0.0);
  CHECK(single.objective_spread == 0.0);
}

TEST_CASE("flat objective on a line: equal objectives, distinct limits") {
  // R = O, p = 0 over the affine line {q : A q = b} in H^2
  const std::size_t n = 2;
  Rng rng(37);
  const QMatrix A = random_qmatrix(1, n, rng);
  const QVector b = random_qvector(1, rng);
  const ConstrainedQP prob{QuadraticObjective(QMatrix(n, n), QVector(n), 1.0), A, b};
  const ProbeReport probe = local_global_probe(prob, 6, 41);
  CHECK(probe.objective_spread < 1e-12);
  CHECK(probe.max_pairwise_distance > 1e-3);  // distinct feasible limit points
  for (const SolveResult& r : probe.runs) CHECK(r.objective_value == doctest::Approx(1.0));
}

TEST_CASE("safe step scales inversely with the spectrum") {
  const QuadraticObjective sq(scale(4.0, QMatrix::identity(2)), QVector(2), 0.0);
  CHECK(safe_step(sq) == doctest::Approx(0.25));
  CHECK(safe_step(QuadraticObjective(QMatrix(2, 2), QVector(2), 0.0)) == 1.0);
}
