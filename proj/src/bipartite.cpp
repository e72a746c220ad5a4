#include "dianorm/bipartite.hpp"

#include "dianorm/errors.hpp"
#include "dianorm/square_norm.hpp"

namespace dianorm {

BipartiteOperator::BipartiteOperator(std::size_t dw, std::size_t dv, ComplexMatrix m)
    : dim_w(dw), dim_v(dv), matrix(std::move(m)) {
  if (dim_w == 0 || dim_v == 0)
    throw DimensionError("BipartiteOperator: factor dimensions must be positive");
  if (matrix.rows() != side() || matrix.cols() != side())
    throw DimensionError("BipartiteOperator: matrix side must equal dim_w * dim_v");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace_w(const BipartiteOperator& x) {
  const std::size_t dv = x.dim_v;
  ComplexMatrix out(dv, dv);
  for (std::size_t w = 0; w < x.dim_w; ++w)
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t vp = 0; vp < dv; ++vp)
        out(v, vp) += x.matrix(w * dv + v, w * dv + vp);
  return out;
}

BipartiteOperator apply_left_on_v(const ComplexMatrix& a, const BipartiteOperator& x) {
  const std::size_t dv = x.dim_v;
  if (a.rows() != dv || a.cols() != dv)
    throw DimensionError("apply_left_on_v: operator on V has the wrong size");
  const std::size_t side = x.side();
  ComplexMatrix out(side, side);
  // Row blocks: out[(w, v), c] = sum_u a[v, u] x[(w, u), c].
  for (std::size_t w = 0; w < x.dim_w; ++w)
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t u = 0; u < dv; ++u) {
        const Complex avu = a(v, u);
        if (avu == Complex(0.0, 0.0)) continue;
        for (std::size_t c = 0; c < side; ++c)
          out(w * dv + v, c) += avu * x.matrix(w * dv + u, c);
      }
  return {x.dim_w, x.dim_v, std::move(out)};
}

BipartiteOperator apply_right_on_v(const BipartiteOperator& x, const ComplexMatrix& b) {
  const std::size_t dv = x.dim_v;
  if (b.rows() != dv || b.cols() != dv)
    throw DimensionError("apply_right_on_v: operator on V has the wrong size");
  const std::size_t side = x.side();
  ComplexMatrix out(side, side);
  // Column blocks: out[r, (w, v)] = sum_u x[r, (w, u)] b[u, v].
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t w = 0; w < x.dim_w; ++w)
      for (std::size_t u = 0; u < dv; ++u) {
        const Complex xru = x.matrix(r, w * dv + u);
        if (xru == Complex(0.0, 0.0)) continue;
        for (std::size_t v = 0; v < dv; ++v) out(r, w * dv + v) += xru * b(u, v);
      }
  return {x.dim_w, x.dim_v, std::move(out)};
}

LinearMapRep choi_from_kraus(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw DimensionError("choi_from_kraus: need at least one Kraus operator");
  const std::size_t dw = kraus.front().rows();
  const std::size_t dv = kraus.front().cols();
  for (const auto& k : kraus)
    if (k.rows() != dw || k.cols() != dv)
      throw DimensionError("choi_from_kraus: Kraus operators disagree in shape");

  // J = sum_k t_k t_k† with t_k the row-major vectorization of K_k, since
  // t_k[(w, i)] = K_k[w, i].
  const std::size_t side = dw * dv;
  ComplexMatrix j(side, side);
  for (const auto& k : kraus)
    for (std::size_t r = 0; r < side; ++r)
      for (std::size_t c = 0; c < side; ++c)
        j(r, c) += k.entries()[r] * std::conj(k.entries()[c]);
  return {dv, dw, BipartiteOperator(dw, dv, std::move(j))};
}

LinearMapRep choi_from_superop(const ComplexMatrix& s, std::size_t in_dim, std::size_t out_dim) {
  if (in_dim == 0 || out_dim == 0)
    throw DimensionError("choi_from_superop: dimensions must be positive");
  if (s.rows() != out_dim * out_dim || s.cols() != in_dim * in_dim)
    throw DimensionError("choi_from_superop: superoperator shape mismatch");
  const std::size_t side = out_dim * in_dim;
  ComplexMatrix j(side, side);
  // J[(w, i), (w', j)] = M(|i><j|)[w, w'] = s[(w, w'), (i, j)].
  for (std::size_t w = 0; w < out_dim; ++w)
    for (std::size_t i = 0; i < in_dim; ++i)
      for (std::size_t wp = 0; wp < out_dim; ++wp)
        for (std::size_t jj = 0; jj < in_dim; ++jj)
          j(w * in_dim + i, wp * in_dim + jj) = s(w * out_dim + wp, i * in_dim + jj);
  return {in_dim, out_dim, BipartiteOperator(out_dim, in_dim, std::move(j))};
}

ComplexMatrix apply_map(const LinearMapRep& m, const ComplexMatrix& rho) {
  const std::size_t dv = m.in_dim;
  const std::size_t dw = m.out_dim;
  if (rho.rows() != dv || rho.cols() != dv)
    throw DimensionError("apply_map: input must be dim_v x dim_v");
  ComplexMatrix out(dw, dw);
  for (std::size_t w = 0; w < dw; ++w)
    for (std::size_t wp = 0; wp < dw; ++wp) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j)
          s += m.choi.matrix(w * dv + i, wp * dv + j) * rho(i, j);
      out(w, wp) = s;
    }
  return out;
}

ComplexMatrix superop_from_choi(const LinearMapRep& m) {
  const std::size_t dv = m.in_dim;
  const std::size_t dw = m.out_dim;
  ComplexMatrix s(dw * dw, dv * dv);
  for (std::size_t w = 0; w < dw; ++w)
    for (std::size_t wp = 0; wp < dw; ++wp)
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j)
          s(w * dw + wp, i * dv + j) = m.choi.matrix(w * dv + i, wp * dv + j);
  return s;
}

double diamond_norm(const LinearMapRep& m, const SeesawConfig& cfg) {
  return square_norm(m.choi, cfg).value / static_cast<double>(m.in_dim);
}

double diamond_norm(const LinearMapRep& m) { return diamond_norm(m, SeesawConfig{}); }

}  // namespace dianorm
