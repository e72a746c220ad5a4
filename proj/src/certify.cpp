#include "dianorm/certify.hpp"

#include <algorithm>
#include <cmath>

#include "dianorm/decomposition.hpp"
#include "dianorm/errors.hpp"
#include "dianorm/norms.hpp"
#include "dianorm/random.hpp"

namespace dianorm {

std::string to_string(SaturationVerdict v) {
  switch (v) {
    case SaturationVerdict::LowerSaturated: return "LowerSaturated";
    case SaturationVerdict::UpperSaturated: return "UpperSaturated";
    case SaturationVerdict::Neither: return "Neither";
    case SaturationVerdict::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

namespace {

// Shared analysis: one SVD of X yields sqrt(XX†) = U S U†, sqrt(X†X) = V S V†,
// the nuclear norm, both partial traces, both residuals and the witnesses.
struct Analysis {
  double nuclear = 0.0;
  SaturationCertificate cert;
};

Analysis analyze(const BipartiteOperator& x) {
  Analysis out;
  const SvdResult dec = svd(x.matrix);
  double nuc = 0.0;
  for (double s : dec.singular_values) nuc += s;
  out.nuclear = nuc;
  if (nuc <= kTolLin) {
    out.cert.verdict = SaturationVerdict::Degenerate;
    out.cert.left_partial = ComplexMatrix(x.dim_v, x.dim_v);
    out.cert.right_partial = ComplexMatrix(x.dim_v, x.dim_v);
    return out;
  }

  std::vector<Complex> sig(dec.singular_values.begin(), dec.singular_values.end());
  const ComplexMatrix diag = ComplexMatrix::diagonal(sig);
  const ComplexMatrix sqrt_xxd = dec.left * diag * dec.left.adjoint();
  const ComplexMatrix sqrt_xdx = dec.right * diag * dec.right.adjoint();
  out.cert.left_partial = partial_trace_w({x.dim_w, x.dim_v, sqrt_xxd});
  out.cert.right_partial = partial_trace_w({x.dim_w, x.dim_v, sqrt_xdx});

  const std::size_t n = x.dim_v;
  const ComplexMatrix target =
      Complex(nuc / static_cast<double>(n), 0.0) * ComplexMatrix::identity(n);
  out.cert.lower_residual = std::max(frobenius_distance(out.cert.left_partial, target),
                                     frobenius_distance(out.cert.right_partial, target)) /
                            nuc;

  // Rank-1 test on each partial: both the top-eigenvalue deficit and the
  // tail mass, in units of ||X||_1.
  double upper = 0.0;
  auto rank1_residual = [&](const ComplexMatrix& partial, ComplexMatrix& witness) {
    const HermEigResult eig = herm_eig(partial);
    const double lmax = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    double tail = 0.0;
    for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) tail += eig.eigenvalues[i];
    witness = eig.eigenvectors.col(0);
    return std::max((nuc - lmax) / nuc, tail / nuc);
  };
  upper = std::max(upper, rank1_residual(out.cert.left_partial, out.cert.psi));
  upper = std::max(upper, rank1_residual(out.cert.right_partial, out.cert.phi));
  out.cert.upper_residual = upper;
  return out;
}

void require_nonzero_square(const ComplexMatrix& m, const char* who) {
  if (!m.is_square()) throw DimensionError(std::string(who) + ": matrix must be square");
  if (entrywise_frobenius(m) == 0.0)
    throw DegenerateInputError(std::string(who) + ": zero matrix");
}

// Condition ii of the Hoelder saturation: every column of `basis` must be a
// singular vector of `a` at its largest singular value; `use_left` switches
// to left singular vectors (a a† instead of a† a).
bool top_subspace_check(const ComplexMatrix& a, const ComplexMatrix& basis, double spec,
                        double tol, bool use_left) {
  const ComplexMatrix g = use_left ? gram_right(a) : gram(a);
  const double spec2 = spec * spec;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    const ComplexMatrix p = basis.col(j);
    const ComplexMatrix gp = g * p;
    double fixed_point = 0.0;
    double image_norm2 = 0.0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      fixed_point += std::norm(gp(i, 0) - spec2 * p(i, 0));
      image_norm2 += (std::conj(p(i, 0)) * gp(i, 0)).real();
    }
    const double image_norm = std::sqrt(std::max(image_norm2, 0.0));  // = ||A p|| resp. ||A† p||
    if (std::abs(image_norm - spec) > tol * spec) return false;
    if (std::sqrt(fixed_point) > tol * spec2) return false;
  }
  return true;
}

}  // namespace

SaturationCertificate certify_lower(const BipartiteOperator& x, double tol) {
  Analysis a = analyze(x);
  if (a.cert.verdict == SaturationVerdict::Degenerate) return std::move(a.cert);
  a.cert.verdict = a.cert.lower_residual <= tol ? SaturationVerdict::LowerSaturated
                                                : SaturationVerdict::Neither;
  return std::move(a.cert);
}

SaturationCertificate certify_upper(const BipartiteOperator& x, double tol) {
  Analysis a = analyze(x);
  if (a.cert.verdict == SaturationVerdict::Degenerate) return std::move(a.cert);
  a.cert.verdict = a.cert.upper_residual <= tol ? SaturationVerdict::UpperSaturated
                                                : SaturationVerdict::Neither;
  return std::move(a.cert);
}

bool norm12_saturation(const ComplexMatrix& x, double tol) {
  require_nonzero_square(x, "norm12_saturation");
  const double nuc = nuclear_norm(x);
  if (nuc <= kTolLin) throw DegenerateInputError("norm12_saturation: numerically zero matrix");
  // Equality in ||X||_1 <= sqrt(n) ||X||_2 holds iff all singular values
  // coincide, i.e. (n/||X||_1) X is unitary.
  const std::size_t n = x.rows();
  const Complex scale(static_cast<double>(n) / nuc, 0.0);
  const ComplexMatrix y = scale * x;
  return frobenius_distance(gram_right(y), ComplexMatrix::identity(n)) <= tol;
}

HolderReport holder_saturation(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_nonzero_square(a, "holder_saturation");
  if (!b.is_square() || b.rows() != a.rows())
    throw DimensionError("holder_saturation: operands must be square and equally sized");

  HolderReport report;
  const double a_spec = spectral_norm(a);
  const double b_nuc = nuclear_norm(b);
  const double bound = a_spec * b_nuc;
  report.equality_gap = bound - nuclear_norm(a * b);
  report.saturated = bound == 0.0 || report.equality_gap <= tol * bound;

  const ComplexMatrix basis = range_basis(b);
  report.singular_check = top_subspace_check(a, basis, a_spec, tol, /*use_left=*/false);

  // || P† A†A P / ||A||_inf^2 - 1_rank ||_F
  const ComplexMatrix projected = basis.adjoint() * gram(a) * basis;
  const std::size_t r = basis.cols();
  report.isometry_residual = frobenius_distance(
      Complex(1.0 / (a_spec * a_spec), 0.0) * projected, ComplexMatrix::identity(r));
  return report;
}

IteratedHolderReport iterated_holder(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const ComplexMatrix& c, double tol) {
  require_nonzero_square(a, "iterated_holder");
  require_nonzero_square(c, "iterated_holder");
  if (!b.is_square() || b.rows() != a.rows() || c.rows() != a.rows())
    throw DimensionError("iterated_holder: operands must be square and equally sized");

  IteratedHolderReport report;
  const double a_spec = spectral_norm(a);
  const double c_spec = spectral_norm(c);
  const double b_nuc = nuclear_norm(b);
  const double bound = a_spec * b_nuc * c_spec;
  report.equality_gap = bound - nuclear_norm(a * b * c);
  report.saturated = bound == 0.0 || report.equality_gap <= tol * bound;

  const SvdResult bd = svd(b);
  const double s1 = bd.singular_values.empty() ? 0.0 : bd.singular_values[0];
  std::size_t rank = 0;
  for (double s : bd.singular_values)
    if (s > kTolRank * s1 && s > 0.0) ++rank;
  ComplexMatrix ran_b(b.rows(), rank);      // left singular vectors: ran(B)
  ComplexMatrix ran_bd(b.rows(), rank);     // right singular vectors: ran(B†)
  for (std::size_t j = 0; j < rank; ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) {
      ran_b(i, j) = bd.left(i, j);
      ran_bd(i, j) = bd.right(i, j);
    }

  report.right_vectors_ok = top_subspace_check(a, ran_b, a_spec, tol, /*use_left=*/false);
  report.left_vectors_ok = top_subspace_check(c, ran_bd, c_spec, tol, /*use_left=*/true);
  return report;
}

BipartiteOperator gen_cptp_choi(std::size_t dim_w, std::size_t dim_v, std::size_t kraus_count,
                                std::uint64_t seed) {
  if (dim_w == 0 || dim_v == 0 || kraus_count == 0)
    throw DimensionError("gen_cptp_choi: dimensions and kraus_count must be positive");
  if (kraus_count * dim_w < dim_v)
    throw DimensionError("gen_cptp_choi: kraus_count * dim_w must be at least dim_v");

  Rng rng(derive_seed(seed, 0x63707470ull));
  ComplexMatrix stacked = gaussian_matrix(rng, kraus_count * dim_w, dim_v);
  orthonormalize_columns(stacked);  // sum_k K_k† K_k = 1_V exactly up to rounding

  std::vector<ComplexMatrix> kraus(kraus_count, ComplexMatrix(dim_w, dim_v));
  for (std::size_t k = 0; k < kraus_count; ++k)
    for (std::size_t r = 0; r < dim_w; ++r)
      for (std::size_t c = 0; c < dim_v; ++c) kraus[k](r, c) = stacked(k * dim_w + r, c);
  return choi_from_kraus(kraus).choi;
}

BipartiteOperator gen_upper_saturator(const ComplexMatrix& y, const ComplexMatrix& psi,
                                      const ComplexMatrix& phi) {
  require_nonzero_square(y, "gen_upper_saturator");
  if (psi.cols() != 1 || phi.cols() != 1 || psi.rows() != phi.rows() || psi.rows() == 0)
    throw DimensionError("gen_upper_saturator: psi/phi must be equal-length column vectors");
  const double np = vec_norm(psi);
  const double nq = vec_norm(phi);
  if (np == 0.0 || nq == 0.0)
    throw DegenerateInputError("gen_upper_saturator: zero witness vector");
  ComplexMatrix outer(psi.rows(), psi.rows());
  for (std::size_t i = 0; i < psi.rows(); ++i)
    for (std::size_t j = 0; j < phi.rows(); ++j)
      outer(i, j) = (psi(i, 0) / np) * std::conj(phi(j, 0) / nq);
  return {y.rows(), psi.rows(), kron(y, outer)};
}

}  // namespace dianorm
