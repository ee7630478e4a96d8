#include "quatopt/random.hpp"

namespace quatopt {

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double a = normal(rng);
  const double b = normal(rng);
  const double c = normal(rng);
  const double d = normal(rng);
  return {a, b, c, d};
}

QVector random_qvector(std::size_t n, Rng& rng) {
  QVector v(n);
  for (std::size_t s = 0; s < n; ++s) v[s] = random_quaternion(rng);
  return v;
}

QMatrix random_qmatrix(std::size_t m, std::size_t n, Rng& rng) {
  QMatrix M(m, n);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < n; ++t) M.at(s, t) = random_quaternion(rng);
  return M;
}

QMatrix random_hermitian(std::size_t n, Rng& rng) {
  const QMatrix M = random_qmatrix(n, n, rng);
  return scale(0.5, add(M, hermitian_transpose(M)));
}

QMatrix random_psd(std::size_t n, Rng& rng) {
  const QMatrix A = random_qmatrix(n, n, rng);
  return matmul(hermitian_transpose(A), A);
}

QMatrix random_pd(std::size_t n, Rng& rng) {
  return add(random_psd(n, rng), QMatrix::identity(n));
}

}  // namespace quatopt
