#pragma once

#include "dianorm/complex_matrix.hpp"

namespace dianorm {

/// Nuclear (trace) norm: sum of singular values.
double nuclear_norm(const ComplexMatrix& x);

/// Frobenius norm: sqrt of the sum of squared magnitudes.
double frobenius_norm(const ComplexMatrix& x);

/// Spectral norm: largest singular value.
double spectral_norm(const ComplexMatrix& x);

}  // namespace dianorm
