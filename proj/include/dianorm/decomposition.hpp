#pragma once

#include <vector>

#include "dianorm/complex_matrix.hpp"

namespace dianorm {

/// Residual contract for every decomposition in this module (reconstruction
/// and unitarity defects, Frobenius norm).
inline constexpr double kTolLin = 1e-10;

/// Relative clamping threshold for positive-semidefinite inputs, scaled by
/// the largest eigenvalue magnitude.
inline constexpr double kTolPsdRel = 1e-8;

/// Relative singular-value cutoff for rank/range decisions.
inline constexpr double kTolRank = 1e-10;

/// Eigenvalues of PSD matrices below this fraction of the largest one are
/// indistinguishable from iteration noise and are treated as exact zeros
/// (their square roots would otherwise inject sqrt(noise)-sized errors).
inline constexpr double kEigNoiseRel = 1e-13;

struct HermEigResult {
  std::vector<double> eigenvalues;  // real, nonincreasing
  ComplexMatrix eigenvectors;       // unitary; column k pairs with eigenvalues[k]
};

struct SvdResult {
  ComplexMatrix left;                   // U, rows x rows, unitary
  std::vector<double> singular_values;  // nonincreasing, length min(rows, cols)
  ComplexMatrix right;                  // V, cols x cols, unitary; X = U diag(sigma) V†
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// The input is symmetrized as (H + H†)/2 before iterating. Eigenvector
/// columns carry a fixed gauge: the first component of magnitude above
/// 1e-8 is made real nonnegative.
HermEigResult herm_eig(const ComplexMatrix& h);

/// Singular value decomposition X = U diag(sigma) V†. Right factors come
/// from herm_eig of X†X; left factors are X v / ||X v|| with null-space
/// columns completed by Gram-Schmidt against the canonical basis. The
/// gauge of each right singular vector is fixed as in herm_eig.
SvdResult svd(const ComplexMatrix& x);

/// Singular values only (the diagonal of the SVD), nonincreasing.
std::vector<double> singular_values(const ComplexMatrix& x);

/// The unique PSD square root. Eigenvalues in [-tol_psd, kEigNoiseRel*lmax]
/// are clamped to zero; anything below -tol_psd (relative to the largest
/// magnitude) throws NotPsdError.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& h);

/// Sign matrix S_X = V U† of the SVD X = U Sigma V†. Satisfies
/// X S_X = sqrt(X X†) and S_X X = sqrt(X† X); S_X itself is gauge-dependent
/// on the null space (the zero matrix maps to the identity).
ComplexMatrix sign_matrix(const ComplexMatrix& x);

/// Orthonormal basis of ran(b): left singular vectors with
/// sigma_i > kTolRank * sigma_1, returned as columns (possibly zero of them).
ComplexMatrix range_basis(const ComplexMatrix& b);

/// In-place modified Gram-Schmidt with re-orthogonalization. Throws
/// NumericalError if the columns are numerically rank deficient.
void orthonormalize_columns(ComplexMatrix& m);

}  // namespace dianorm
