#include "dianorm/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dianorm/errors.hpp"

namespace dianorm {

namespace {

constexpr int kMaxJacobiSweeps = 60;
constexpr double kPhasePivot = 1e-8;  // "first nonzero component" threshold

double off_diagonal_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p, q). Accumulates into v (V <- V G).
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q,
                   double skip_threshold) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b <= skip_threshold) return;

  const Complex phase = apq / b;  // e^{i alpha}, so that conj(phase)*apq is real
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * b);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex s_cp = s * std::conj(phase);

  const std::size_t n = a.rows();

  // A <- A G, with G = [[c, s], [-s e^{-ia}, c e^{-ia}]] on the (p, q) plane.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip - s_cp * aiq;
    a(i, q) = s * aip + c * std::conj(phase) * aiq;
  }
  // A <- G† A.
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj - s * phase * aqj;
    a(q, j) = s * apj + c * phase * aqj;
  }
  // Exact values on the rotated 2x2 block.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(app - t * b, 0.0);
  a(q, q) = Complex(aqq + t * b, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip - s_cp * viq;
    v(i, q) = s * vip + c * std::conj(phase) * viq;
  }
}

void hermitize(ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
    a(i, i) = Complex(a(i, i).real(), 0.0);
  }
}

// Rotate each column so its first component above kPhasePivot is real >= 0.
void fix_column_phases(ComplexMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const double mag = std::abs(m(i, j));
      if (mag > kPhasePivot) {
        const Complex f = std::conj(m(i, j)) / mag;
        for (std::size_t k = 0; k < m.rows(); ++k) m(k, j) *= f;
        m(i, j) = Complex(std::abs(m(i, j)), 0.0);
        break;
      }
    }
  }
}

// Unsorted Jacobi iteration; returns the diagonalized copy alongside V.
void jacobi_diagonalize(ComplexMatrix a, ComplexMatrix& v, std::vector<double>& eigenvalues) {
  const std::size_t n = a.rows();
  v = ComplexMatrix::identity(n);
  eigenvalues.assign(n, 0.0);
  const double scale = entrywise_frobenius(a);
  if (scale == 0.0) return;

  const double stop = 1e-15 * scale;
  const double skip = stop / (2.0 * static_cast<double>(n));
  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_frobenius(a) <= stop) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q, skip);
    hermitize(a);
  }
  if (!converged && off_diagonal_frobenius(a) > stop)
    throw NumericalError("herm_eig: Jacobi iteration did not converge within the sweep cap");

  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a(i, i).real();
}

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return idx;
}

void require_finite(const ComplexMatrix& m, const char* who) {
  if (!m.is_finite()) throw NumericalError(std::string(who) + ": input has NaN/Inf entries");
}

}  // namespace

HermEigResult herm_eig(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionError("herm_eig: matrix must be square");
  require_finite(h, "herm_eig");

  ComplexMatrix a = h;
  hermitize(a);

  ComplexMatrix v;
  std::vector<double> lambda;
  jacobi_diagonalize(std::move(a), v, lambda);

  const auto order = descending_order(lambda);
  HermEigResult out;
  out.eigenvalues.resize(lambda.size());
  out.eigenvectors = ComplexMatrix(h.rows(), h.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.eigenvalues[k] = lambda[order[k]];
    for (std::size_t i = 0; i < h.rows(); ++i)
      out.eigenvectors(i, k) = v(i, order[k]);
  }
  fix_column_phases(out.eigenvectors);
  return out;
}

void orthonormalize_columns(ComplexMatrix& m) {
  const std::size_t cols = m.cols();
  for (std::size_t j = 0; j < cols; ++j) {
    ComplexMatrix u = m.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        const ComplexMatrix ui = m.col(i);
        const Complex proj = dot(ui, u);
        for (std::size_t r = 0; r < u.rows(); ++r) u(r, 0) -= proj * ui(r, 0);
      }
    }
    const double norm = vec_norm(u);
    if (norm < 1e-8)
      throw NumericalError("orthonormalize_columns: numerically rank-deficient columns");
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, 0) /= norm;
    m.set_col(j, u);
  }
}

namespace {

// Extend the first `have` orthonormal columns of u (rows x rows) to a full
// basis using canonical candidates, then re-orthonormalize everything.
void complete_left_basis(ComplexMatrix& u, std::size_t have) {
  const std::size_t m = u.rows();
  const double accept = 0.5 / std::sqrt(static_cast<double>(std::max<std::size_t>(m, 1)));
  std::size_t next = have;
  for (std::size_t cand = 0; cand < m && next < m; ++cand) {
    ComplexMatrix w = unit_basis(m, cand);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < next; ++i) {
        const ComplexMatrix ui = u.col(i);
        const Complex proj = dot(ui, w);
        for (std::size_t r = 0; r < m; ++r) w(r, 0) -= proj * ui(r, 0);
      }
    }
    const double norm = vec_norm(w);
    if (norm < accept) continue;
    for (std::size_t r = 0; r < m; ++r) w(r, 0) /= norm;
    u.set_col(next++, w);
  }
  if (next < m) throw NumericalError("svd: failed to complete the left singular basis");
  orthonormalize_columns(u);
}

}  // namespace

namespace {

// Shared core of svd() and singular_values(): right factors from the Gram
// matrix, sigma_j = ||X v_j|| re-sorted to be exactly nonincreasing, and the
// below-noise cutoff.
struct SigmaCore {
  HermEigResult eig;                // of x† x
  std::vector<ComplexMatrix> image; // x v_j, unsorted
  std::vector<double> sigma;        // unsorted
  std::vector<std::size_t> order;   // nonincreasing sigma
  double cutoff = 0.0;
};

SigmaCore sigma_core(const ComplexMatrix& x) {
  SigmaCore core;
  core.eig = herm_eig(gram(x));
  const std::size_t n = x.cols();
  core.image.resize(n);
  core.sigma.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    core.image[j] = x * core.eig.eigenvectors.col(j);
    core.sigma[j] = vec_norm(core.image[j]);
  }
  core.order = descending_order(core.sigma);
  const double smax = n == 0 ? 0.0 : core.sigma[core.order[0]];
  core.cutoff = smax * static_cast<double>(x.rows() + n) *
                std::numeric_limits<double>::epsilon() * 4.0;
  return core;
}

}  // namespace

SvdResult svd(const ComplexMatrix& x) {
  require_finite(x, "svd");
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  const std::size_t k = std::min(m, n);
  const SigmaCore core = sigma_core(x);

  SvdResult out;
  out.right = ComplexMatrix(n, n);
  out.left = ComplexMatrix(m, m);
  out.singular_values.assign(k, 0.0);

  std::size_t rank = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = core.order[j];
    for (std::size_t i = 0; i < n; ++i) out.right(i, j) = core.eig.eigenvectors(i, src);
    if (j < k && core.sigma[src] > core.cutoff) {
      out.singular_values[j] = core.sigma[src];
      ComplexMatrix u = core.image[src];
      for (std::size_t r = 0; r < m; ++r) u(r, 0) /= core.sigma[src];
      out.left.set_col(rank++, u);
    }
  }
  complete_left_basis(out.left, rank);
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& x) {
  require_finite(x, "singular_values");
  const SigmaCore core = sigma_core(x);
  const std::size_t k = std::min(x.rows(), x.cols());
  std::vector<double> out(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    const double s = core.sigma[core.order[j]];
    out[j] = s > core.cutoff ? s : 0.0;
  }
  return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& h) {
  const HermEigResult eig = herm_eig(h);
  const std::size_t n = h.rows();
  double lmax = 0.0;
  for (double l : eig.eigenvalues) lmax = std::max(lmax, std::abs(l));
  if (lmax == 0.0) return ComplexMatrix(n, n);

  const double tol_psd = kTolPsdRel * lmax;
  if (eig.eigenvalues.back() < -tol_psd)
    throw NotPsdError("matrix_sqrt_psd: eigenvalue below the PSD tolerance");

  const double floor = kEigNoiseRel * lmax;
  std::vector<Complex> root(n);
  for (std::size_t i = 0; i < n; ++i)
    root[i] = eig.eigenvalues[i] > floor ? std::sqrt(eig.eigenvalues[i]) : 0.0;
  ComplexMatrix s = eig.eigenvectors * ComplexMatrix::diagonal(root) * eig.eigenvectors.adjoint();
  hermitize(s);
  return s;
}

ComplexMatrix sign_matrix(const ComplexMatrix& x) {
  if (!x.is_square()) throw DimensionError("sign_matrix: matrix must be square");
  require_finite(x, "sign_matrix");
  if (entrywise_frobenius(x) == 0.0) return ComplexMatrix::identity(x.rows());
  const SvdResult dec = svd(x);
  return dec.right * dec.left.adjoint();
}

ComplexMatrix range_basis(const ComplexMatrix& b) {
  const SvdResult dec = svd(b);
  const double s1 = dec.singular_values.empty() ? 0.0 : dec.singular_values[0];
  std::size_t rank = 0;
  for (double s : dec.singular_values)
    if (s > kTolRank * s1 && s > 0.0) ++rank;
  ComplexMatrix p(b.rows(), rank);
  for (std::size_t j = 0; j < rank; ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) p(i, j) = dec.left(i, j);
  return p;
}

}  // namespace dianorm
