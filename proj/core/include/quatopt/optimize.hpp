#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "quatopt/convexity.hpp"

namespace quatopt {

struct SolveResult {
  QVector q_opt;
  double objective_value = 0.0;
  int iterations = 0;  // 0 for closed-form solutions
  std::optional<double> constraint_residual;
  double gradient_residual = 0.0;  // tangential gradient norm when constrained
};

// Equality-constrained quadratic program: minimize the objective subject to
// A q = b with A of full row rank p < n.
struct ConstrainedQP {
  QuadraticObjective objective;
  std::optional<QMatrix> A;
  std::optional<QVector> b;
};

using IterationCallback =
    std::function<void(int iter, const QVector& q, double objective, double grad_norm)>;

// Mean-square-error filter: q_opt = R^{-1} p for Hermitian positive definite R.
SolveResult wiener_solve(const QMatrix& R, const QVector& p);

// Projection onto {x : A x = b}: x = y + A^H (A A^H)^{-1} (b - A y).
SolveResult affine_projection(const QMatrix& A, const QVector& b, const QVector& y);

// Minimum-variance weights under w^H a = 1: w = R^{-1} a / (a^H R^{-1} a).
SolveResult mvdr_beamform(const QMatrix& R, const QVector& a);

// 1 / spectral radius of R; keeps the (R q - p)/2 gradient step a contraction.
double safe_step(const QuadraticObjective& obj);

// Conjugate-gradient-direction descent q <- q - step * grad. Refuses
// objectives that the second-order criterion does not certify
// (NotCertifiedConvex) and raises Diverged after ten consecutive objective
// increases. Stops when ||grad|| <= tol or after max_iter steps.
SolveResult gradient_descent(const QuadraticObjective& obj, const QVector& q0, double step,
                             double tol, int max_iter, const IterationCallback& cb = {});
SolveResult gradient_descent(const QuadraticObjective& obj, const QVector& q0);

// Alternates the descent step with the affine projector; every iterate after
// the first projection is feasible. Falls back to plain descent when the
// problem carries no constraints.
SolveResult projected_gradient(const ConstrainedQP& prob, const QVector& q0, double step,
                               double tol, int max_iter, const IterationCallback& cb = {});
SolveResult projected_gradient(const ConstrainedQP& prob, const QVector& q0);

// Runs the iterative solver from n_starts seeded random initializations and
// reports how far the limit points and objective values spread. For strongly
// convex objectives both collapse to solver tolerance.
struct ProbeReport {
  std::vector<SolveResult> runs;
  double max_pairwise_distance = 0.0;
  double objective_spread = 0.0;
};
ProbeReport local_global_probe(const ConstrainedQP& prob, int n_starts, std::uint64_t seed);

}  // namespace quatopt
