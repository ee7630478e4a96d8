#pragma once

#include <cstdint>
#include <random>

#include "quatopt/qmatrix.hpp"

namespace quatopt {

using Rng = std::mt19937_64;

// Standard-normal components throughout; every randomized code path in the
// library consumes exactly one named seed through one of these.
Quaternion random_quaternion(Rng& rng);
QVector random_qvector(std::size_t n, Rng& rng);
QMatrix random_qmatrix(std::size_t m, std::size_t n, Rng& rng);
QMatrix random_hermitian(std::size_t n, Rng& rng);  // (M + M^H) / 2
QMatrix random_psd(std::size_t n, Rng& rng);        // A^H A
QMatrix random_pd(std::size_t n, Rng& rng);         // A^H A + I

}  // namespace quatopt
