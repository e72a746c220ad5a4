#pragma once

#include <vector>

#include "dianorm/complex_matrix.hpp"

namespace dianorm {

/// Operator on W (x) V. Basis ordered |w>(x)|v> with the W index major:
/// row index = w * dim_v + v. All modules share this convention.
struct BipartiteOperator {
  std::size_t dim_w = 0;
  std::size_t dim_v = 0;
  ComplexMatrix matrix;  // square, side dim_w * dim_v

  BipartiteOperator() = default;
  BipartiteOperator(std::size_t dw, std::size_t dv, ComplexMatrix m);

  std::size_t side() const { return dim_w * dim_v; }
};

/// A linear map M : L(V) -> L(W), held as its unnormalized Choi matrix
/// J(M) = sum_ij M(|i><j|) (x) |i><j| in L(W (x) V).
struct LinearMapRep {
  std::size_t in_dim = 0;   // dim V
  std::size_t out_dim = 0;  // dim W
  BipartiteOperator choi;
};

/// Kronecker product with (A (x) B)[(i p + k), (j q + l)] = A[i,j] B[k,l]
/// for B of size p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the W factor: sends A (x) B to Tr[A] B, extended linearly.
ComplexMatrix partial_trace_w(const BipartiteOperator& x);

/// (1_W (x) a) * x, computed blockwise.
BipartiteOperator apply_left_on_v(const ComplexMatrix& a, const BipartiteOperator& x);

/// x * (1_W (x) b), computed blockwise.
BipartiteOperator apply_right_on_v(const BipartiteOperator& x, const ComplexMatrix& b);

/// Choi matrix of the channel rho -> sum_k K rho K†. All Kraus operators
/// must share one out_dim x in_dim shape.
LinearMapRep choi_from_kraus(const std::vector<ComplexMatrix>& kraus);

/// Choi matrix from the superoperator matrix s (out_dim^2 x in_dim^2)
/// acting on row-major vectorized inputs: vec(M(rho)) = s vec(rho).
LinearMapRep choi_from_superop(const ComplexMatrix& s, std::size_t in_dim, std::size_t out_dim);

/// The action of the map recovered from its Choi matrix:
/// M(rho)[w, w'] = sum_ij choi[(w, i), (w', j)] rho[i, j].
ComplexMatrix apply_map(const LinearMapRep& m, const ComplexMatrix& rho);

/// Superoperator matrix of the map (inverse of choi_from_superop).
ComplexMatrix superop_from_choi(const LinearMapRep& m);

struct SeesawConfig;

/// Diamond norm of the map: square_norm(J(M)) / dim(V).
double diamond_norm(const LinearMapRep& m, const SeesawConfig& cfg);
double diamond_norm(const LinearMapRep& m);

}  // namespace dianorm
