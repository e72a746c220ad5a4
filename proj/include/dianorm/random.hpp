#pragma once

#include <cstdint>
#include <random>

#include "dianorm/complex_matrix.hpp"

namespace dianorm {

/// Deterministic random source. Gaussian variates use an explicit
/// Box-Muller transform so streams are identical across standard library
/// implementations (std::normal_distribution is not pinned by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();   // [0, 1)
  double gaussian();  // N(0, 1)
  Complex complex_gaussian();  // independent N(0, 1) real and imaginary parts

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Decorrelated sub-seed for an independent stream (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

ComplexMatrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_unit_vector(Rng& rng, std::size_t n);
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

}  // namespace dianorm
