#include <benchmark/benchmark.h>

#include "quatopt/convexity.hpp"
#include "quatopt/linalg.hpp"
#include "quatopt/optimize.hpp"
#include "quatopt/random.hpp"

using namespace quatopt;

namespace {

QMatrix fixed_pd(std::size_t n) {
  Rng rng(17);
  return random_pd(n, rng);
}

void BM_HamiltonProduct(benchmark::State& state) {
  Rng rng(1);
  const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_HamiltonProduct);

void BM_MatMul(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const QMatrix A = random_qmatrix(n, n, rng), B = random_qmatrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(A, B));
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(8)->Arg(16);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const QMatrix M = fixed_pd(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_hermitian(M));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(4)->Arg(8)->Arg(16);

void BM_Solve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const QMatrix A = fixed_pd(n);
  Rng rng(3);
  const QVector b = random_qvector(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve(A, b));
}
BENCHMARK(BM_Solve)->Arg(4)->Arg(8)->Arg(16);

void BM_SecondOrderCertificate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const QuadraticObjective obj(fixed_pd(n), QVector(n), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(check_second_order_quadratic(obj));
}
BENCHMARK(BM_SecondOrderCertificate)->Arg(4)->Arg(8);

void BM_ProjectedGradient(benchmark::State& state) {
  const std::size_t n = 8;
  Rng rng(4);
  const ConstrainedQP prob{QuadraticObjective(fixed_pd(n), random_qvector(n, rng), 0.0),
                           random_qmatrix(2, n, rng), random_qvector(2, rng)};
  const QVector q0 = random_qvector(n, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(projected_gradient(prob, q0, safe_step(prob.objective), 1e-8, 5000));
}
BENCHMARK(BM_ProjectedGradient);

}  // namespace

BENCHMARK_MAIN();
