#pragma once

#include <cstdint>
#include <string>

#include "dianorm/bipartite.hpp"
#include "dianorm/complex_matrix.hpp"

namespace dianorm {

/// Default relative threshold for all saturation verdicts.
inline constexpr double kCertifyTol = 1e-8;

enum class SaturationVerdict { LowerSaturated, UpperSaturated, Neither, Degenerate };

std::string to_string(SaturationVerdict v);

/// Witnessed verdict on saturation of ||X||_1 <= sq(X) <= dim(V) ||X||_1.
/// Residuals are relative (normalized by ||X||_1) so thresholds are
/// scale-free. psi/phi are the top eigenvectors of the two partial traces,
/// phase-fixed like right singular vectors; absent for degenerate input.
struct SaturationCertificate {
  SaturationVerdict verdict = SaturationVerdict::Neither;
  ComplexMatrix left_partial;   // Tr_W sqrt(X X†)
  ComplexMatrix right_partial;  // Tr_W sqrt(X† X)
  double lower_residual = 0.0;
  double upper_residual = 0.0;
  ComplexMatrix psi;  // unit vector on V, or empty
  ComplexMatrix phi;

  bool has_witnesses() const { return psi.rows() > 0; }
};

/// Lower-bound saturation: both partial traces equal (||X||_1 / dim V) 1_V.
SaturationCertificate certify_lower(const BipartiteOperator& x, double tol = kCertifyTol);

/// Upper-bound saturation: the partial traces are ||X||_1 psi psi† and
/// ||X||_1 phi phi† for rank-1 projectors.
SaturationCertificate certify_upper(const BipartiteOperator& x, double tol = kCertifyTol);

/// Equality in ||X||_1 <= sqrt(n) ||X||_2: true iff (sqrt(n)/||X||_1) X is
/// unitary within tol. Throws DegenerateInputError on the zero matrix.
bool norm12_saturation(const ComplexMatrix& x, double tol = kCertifyTol);

struct HolderReport {
  double equality_gap = 0.0;       // ||A||_inf ||B||_1 - ||AB||_1
  bool singular_check = false;     // every range basis vector of B is a top right
                                   // singular vector of A (condition ii)
  double isometry_residual = 0.0;  // || P† A†A P / ||A||_inf^2 - 1 ||_F (condition iii)
  bool saturated = false;          // condition i at the given tolerance
};

/// Saturation of ||AB||_1 <= ||A||_inf ||B||_1 with the three equivalent
/// conditions evaluated independently.
HolderReport holder_saturation(const ComplexMatrix& a, const ComplexMatrix& b,
                               double tol = kCertifyTol);

struct IteratedHolderReport {
  double equality_gap = 0.0;  // ||A||_inf ||B||_1 ||C||_inf - ||ABC||_1
  bool saturated = false;
  bool right_vectors_ok = false;  // ran(B) inside the top right-singular subspace of A
  bool left_vectors_ok = false;   // ran(B†) inside the top left-singular subspace of C
};

/// Saturation of ||ABC||_1 <= ||A||_inf ||B||_1 ||C||_inf.
IteratedHolderReport iterated_holder(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const ComplexMatrix& c, double tol = kCertifyTol);

/// Choi matrix of a random channel: kraus_count Gaussian Kraus operators,
/// stacked and column-orthonormalized so that sum K† K = 1_V. The output is
/// PSD with partial trace 1_V, hence lower-saturating. Deterministic per seed.
BipartiteOperator gen_cptp_choi(std::size_t dim_w, std::size_t dim_v, std::size_t kraus_count,
                                std::uint64_t seed);

/// Y (x) psi phi† for unit vectors psi, phi on V: the canonical
/// upper-saturating family. psi/phi are normalized internally.
BipartiteOperator gen_upper_saturator(const ComplexMatrix& y, const ComplexMatrix& psi,
                                      const ComplexMatrix& phi);

}  // namespace dianorm
