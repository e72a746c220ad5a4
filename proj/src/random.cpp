#include "dianorm/random.hpp"

#include <cmath>
#include <numbers>

#include "dianorm/decomposition.hpp"

namespace dianorm {

double Rng::uniform() {
  // 53-bit mantissa from the top bits of the engine output.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_gaussian() { return {gaussian(), gaussian()}; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

ComplexMatrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (Complex& v : m.entries()) v = rng.complex_gaussian();
  return m;
}

ComplexMatrix random_unit_vector(Rng& rng, std::size_t n) {
  ComplexMatrix v = gaussian_matrix(rng, n, 1);
  double norm = vec_norm(v);
  while (norm < 1e-12) {
    v = gaussian_matrix(rng, n, 1);
    norm = vec_norm(v);
  }
  for (std::size_t i = 0; i < n; ++i) v(i, 0) /= norm;
  return v;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix g = gaussian_matrix(rng, n, n);
  orthonormalize_columns(g);
  return g;
}

}  // namespace dianorm
