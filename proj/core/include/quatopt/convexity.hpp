#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatopt/ghr.hpp"
#include "quatopt/linalg.hpp"

namespace quatopt {

enum class Verdict { Certified, Refuted, Inconclusive };

enum class Criterion {
  FirstOrder,
  GradientMonotonicity,
  SecondOrder,
  StrongFirstOrder,
  StrongMonotonicity,
  StrongSecondOrder,
};

const char* to_string(Verdict v);
const char* to_string(Criterion c);

struct Witness {
  QVector p;
  QVector q;
  double violation = 0.0;
};

// Outcome of a convexity or strong-convexity test. Sampling-based criteria
// can only Refute or stay Inconclusive; the second-order spectral criteria
// are exact for quadratics and therefore never Inconclusive.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Criterion criterion = Criterion::FirstOrder;
  std::optional<Witness> witness;
  std::optional<double> sigma;
};

// Deterministic point source over all of H^n or an axis-aligned box (bounds
// applied per real component). `pair_count` is the number of (p, q) pairs a
// pairwise check will consume.
class SampledDomain {
 public:
  enum class Kind { AllSpace, Box };

  static SampledDomain all_space(std::size_t n, std::size_t pair_count, std::uint64_t seed);
  static SampledDomain box(const QVector& lo, const QVector& hi, std::size_t pair_count,
                           std::uint64_t seed);

  Kind kind() const { return kind_; }
  std::size_t dimension() const { return n_; }
  std::size_t pair_count() const { return pairs_; }
  std::uint64_t seed() const { return seed_; }

  // First `count` points of the seed's deterministic stream.
  std::vector<QVector> draw(std::size_t count) const;
  bool contains(const QVector& q) const;

 private:
  SampledDomain(Kind kind, std::size_t n, std::size_t pairs, std::uint64_t seed)
      : kind_(kind), n_(n), pairs_(pairs), seed_(seed) {}

  Kind kind_;
  std::size_t n_;
  std::size_t pairs_;
  std::uint64_t seed_;
  std::optional<QVector> lo_;
  std::optional<QVector> hi_;
};

using GradientFn = std::function<QVector(const QVector&)>;
using PairList = std::vector<std::pair<QVector, QVector>>;

// Pairwise first-order test: f(q) >= f(p) + 4 Re{grad(p)^H (q - p)}. Seeded
// candidate pairs are checked before the sampled ones so eigen-witness
// directions refute quickly. grad is validated against the numeric oracle on
// five points first (GradientMismatch on disagreement).
Certificate check_first_order(const ScalarField& f, const GradientFn& grad,
                              const SampledDomain& dom, const PairList& seeded = {});
// Pairwise test of Re{(grad(p) - grad(q))^H (p - q)} >= 0.
Certificate check_monotonicity(const ScalarField& f, const GradientFn& grad,
                               const SampledDomain& dom, const PairList& seeded = {});
Certificate check_strong_first_order(const ScalarField& f, const GradientFn& grad,
                                     const SampledDomain& dom, double sigma,
                                     const PairList& seeded = {});
Certificate check_strong_monotonicity(const ScalarField& f, const GradientFn& grad,
                                      const SampledDomain& dom, double sigma,
                                      const PairList& seeded = {});

// Exact second-order criterion for quadratics: assembles the augmented
// Hessian and tests positive semidefiniteness. Refutations carry a concrete
// monotonicity-violating pair built from the most negative eigendirection,
// and sigma always holds the strong-convexity estimate.
Certificate check_second_order_quadratic(const QuadraticObjective& obj);

// Necessary condition: the top-left augmented Hessian block R/2 must be PSD.
bool check_necessary_block(const QuadraticObjective& obj);

Certificate check_strong_convexity(const QuadraticObjective& obj, double sigma);
// Largest sigma certified by the spectral threshold: 4 * lambda_min of the
// augmented Hessian, clamped at zero.
double estimate_sigma(const QuadraticObjective& obj);

// One-dimensional restriction g(t) = f(q + t v) for line-based convexity
// probes. Throws ZeroDirection when v = 0.
std::function<double(double)> restrict_to_line(const ScalarField& f, const QVector& q,
                                               const QVector& v);

// The same equality-constrained quadratic program solved three ways: directly
// over quaternions, through the stacked-involution representation, and
// through the real coordinates, with the optima mapped across representations
// for comparison.
struct EquivalenceReport {
  QVector q_quaternion;   // quaternion stationarity solve
  QVector q_real;         // real stationarity solve mapped back
  double objective_quaternion = 0.0;
  double objective_real = 0.0;
  double objective_augmented = 0.0;  // evaluated in the 4n-dimensional form
  double solution_deviation = 0.0;   // ||q_quaternion - q_real||
  double mapping_deviation = 0.0;    // bridge vs stacking route for q_H
  double feasibility_quaternion = 0.0;
  double feasibility_augmented = 0.0;
  double feasibility_real = 0.0;

  double max_deviation() const;
};

EquivalenceReport equivalence_report(const QuadraticObjective& obj,
                                     const std::optional<QMatrix>& A,
                                     const std::optional<QVector>& b);

}  // namespace quatopt
