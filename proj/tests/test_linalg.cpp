#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dianorm/complex_matrix.hpp"
#include "dianorm/decomposition.hpp"
#include "dianorm/errors.hpp"
#include "dianorm/norms.hpp"
#include "dianorm/random.hpp"
#include "test_helpers.hpp"

using namespace dianorm;
using namespace dianorm::testing;

namespace {

const ComplexMatrix kNilpotent = ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}});

}  // namespace

TEST_CASE("svd: diagonal and unitary inputs") {
  const auto diag = svd(ComplexMatrix::diagonal({3.0, 4.0}));
  CHECK(diag.singular_values[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(diag.singular_values[1] == doctest::Approx(3.0).epsilon(1e-12));

  Rng rng(11);
  const ComplexMatrix u = random_unitary(rng, 5);
  for (double s : svd(u).singular_values) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("svd: nilpotent matrix has singular values (2, 0)") {
  // X†X = diag(0, 4), eigenvalues 4 and 0 by hand.
  const auto dec = svd(kNilpotent);
  CHECK(dec.singular_values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(approx_zero(dec.singular_values[1]));
  CHECK(approx_zero(frobenius_distance(reconstruct(dec, 2, 2), kNilpotent)));
  CHECK(approx_zero(unitary_defect(dec.left)));
}

TEST_CASE("svd: invariants on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng.next_u64() % 12);
    const std::size_t n = 1 + static_cast<std::size_t>(rng.next_u64() % 12);
    const ComplexMatrix x = gaussian_matrix(rng, m, n);
    const auto dec = svd(x);
    CHECK(unitary_defect(dec.left) <= kTolLin);
    CHECK(unitary_defect(dec.right) <= kTolLin);
    CHECK(frobenius_distance(reconstruct(dec, m, n), x) <= kTolLin);
    CHECK(std::is_sorted(dec.singular_values.rbegin(), dec.singular_values.rend()));
    for (double s : dec.singular_values) CHECK(s >= 0.0);
  }
}

TEST_CASE("svd: deterministic with a fixed phase convention") {
  Rng rng(23);
  const ComplexMatrix x = gaussian_matrix(rng, 6, 6);
  const auto first = svd(x);
  const auto second = svd(x);
  CHECK(first.left.entries() == second.left.entries());
  CHECK(first.right.entries() == second.right.entries());
  CHECK(first.singular_values == second.singular_values);

  // Right singular vectors: first significant component is real nonnegative.
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t i = 0; i < 6; ++i) {
      const Complex v = first.right(i, j);
      if (std::abs(v) > 1e-8) {
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(v.real() >= 0.0);
        break;
      }
    }
  }
}

TEST_CASE("svd: rejects non-finite input") {
  ComplexMatrix bad(2, 2);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(svd(bad), NumericalError);
}

TEST_CASE("herm_eig: fixed examples") {
  const auto d = herm_eig(ComplexMatrix::diagonal({1.0, 5.0}));
  CHECK(d.eigenvalues[0] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  // Characteristic polynomial of [[2,1],[1,2]]: (2-l)^2 = 1, eigenvalues 3 and 1.
  const auto e = herm_eig(ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}}));
  CHECK(e.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  const auto id = herm_eig(ComplexMatrix::identity(4));
  for (double l : id.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(herm_eig(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("herm_eig: random Hermitian matrices against the 2x2 oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 2);
    const auto eig = herm_eig(h);
    const auto oracle = eig2_oracle(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(oracle[0]).epsilon(1e-11));
    CHECK(eig.eigenvalues[1] == doctest::Approx(oracle[1]).epsilon(1e-11));
  }
}

TEST_CASE("herm_eig: reconstruction and unitarity at size 16") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 16);
    const auto eig = herm_eig(h);
    CHECK(unitary_defect(eig.eigenvectors) <= kTolLin);
    std::vector<Complex> lambda(eig.eigenvalues.begin(), eig.eigenvalues.end());
    const ComplexMatrix rebuilt =
        eig.eigenvectors * ComplexMatrix::diagonal(lambda) * eig.eigenvectors.adjoint();
    CHECK(frobenius_distance(rebuilt, h) <= kTolLin);
    CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
  }
}

TEST_CASE("matrix_sqrt_psd: fixed examples") {
  const ComplexMatrix a = matrix_sqrt_psd(ComplexMatrix::diagonal({4.0, 9.0}));
  CHECK(frobenius_distance(a, ComplexMatrix::diagonal({2.0, 3.0})) <= kTolLin);

  const ComplexMatrix id = matrix_sqrt_psd(ComplexMatrix::identity(3));
  CHECK(frobenius_distance(id, ComplexMatrix::identity(3)) <= kTolLin);

  // Eigenvectors (1, +-1)/sqrt(2) with eigenvalues 3 and 1 give
  // sqrt = [[(r3+1)/2, (r3-1)/2], [(r3-1)/2, (r3+1)/2]].
  const double r3 = std::sqrt(3.0);
  const ComplexMatrix expected = ComplexMatrix::from_rows(
      {{(r3 + 1.0) / 2.0, (r3 - 1.0) / 2.0}, {(r3 - 1.0) / 2.0, (r3 + 1.0) / 2.0}});
  const ComplexMatrix s = matrix_sqrt_psd(ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}}));
  CHECK(frobenius_distance(s, expected) <= kTolLin);
}

TEST_CASE("matrix_sqrt_psd: clamps noise but rejects indefinite input") {
  CHECK_THROWS_AS(matrix_sqrt_psd(ComplexMatrix::diagonal({1.0, -1.0})), NotPsdError);

  // Slightly negative eigenvalue within tolerance is clamped to zero.
  const ComplexMatrix near = ComplexMatrix::diagonal({1.0, -1e-12});
  const ComplexMatrix s = matrix_sqrt_psd(near);
  CHECK(s(1, 1).real() == doctest::Approx(0.0));

  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_psd(rng, 6);
    const ComplexMatrix root = matrix_sqrt_psd(h);
    CHECK(frobenius_distance(root * root, h) <= kTolLin * std::max(1.0, entrywise_frobenius(h)));
    CHECK(frobenius_distance(root, root.adjoint()) <= kTolLin);
  }
}

TEST_CASE("sign_matrix: fixed examples and contract identities") {
  CHECK(frobenius_distance(sign_matrix(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <=
        kTolLin);

  Rng rng(13);
  const ComplexMatrix u = random_unitary(rng, 4);
  CHECK(frobenius_distance(sign_matrix(u), u.adjoint()) <= kTolLin);

  // Gauge-free null space: only the contract X S = sqrt(XX†) is pinned.
  const ComplexMatrix s = sign_matrix(kNilpotent);
  CHECK(frobenius_distance(kNilpotent * s, ComplexMatrix::diagonal({2.0, 0.0})) <= kTolLin);

  CHECK(frobenius_distance(sign_matrix(ComplexMatrix(3, 3)), ComplexMatrix::identity(3)) <=
        kTolLin);
}

TEST_CASE("sign_matrix: random contract checks") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 7);
    const ComplexMatrix x = gaussian_matrix(rng, n, n);
    const ComplexMatrix s = sign_matrix(x);
    CHECK(unitary_defect(s) <= kTolLin);
    CHECK(frobenius_distance(x * s, matrix_sqrt_psd(gram_right(x))) <= kTolLin);
    CHECK(frobenius_distance(s * x, matrix_sqrt_psd(gram(x))) <= kTolLin);
    // Both products are PSD.
    const auto left = herm_eig(x * s);
    CHECK(left.eigenvalues.back() >= -kTolPsdRel * std::max(1.0, left.eigenvalues.front()));
  }
}

TEST_CASE("norms: fixed examples") {
  const ComplexMatrix d = ComplexMatrix::diagonal({3.0, 4.0});
  CHECK(nuclear_norm(d) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(frobenius_norm(d) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(spectral_norm(d) == doctest::Approx(4.0).epsilon(1e-12));

  Rng rng(29);
  const std::size_t n = 5;
  const ComplexMatrix u = random_unitary(rng, n);
  CHECK(nuclear_norm(u) == doctest::Approx(static_cast<double>(n)).epsilon(1e-11));
  CHECK(frobenius_norm(u) == doctest::Approx(std::sqrt(static_cast<double>(n))).epsilon(1e-11));
  CHECK(spectral_norm(u) == doctest::Approx(1.0).epsilon(1e-11));

  const ComplexMatrix zero(3, 3);
  CHECK(nuclear_norm(zero) == 0.0);
  CHECK(frobenius_norm(zero) == 0.0);
  CHECK(spectral_norm(zero) == 0.0);
}

TEST_CASE("norms: chain and unitary invariance on random matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 7);
    const ComplexMatrix x = gaussian_matrix(rng, n, n);
    const double n1 = nuclear_norm(x);
    const double n2 = frobenius_norm(x);
    const double ninf = spectral_norm(x);
    CHECK(ninf <= n2 + kTolLin);
    CHECK(n2 <= n1 + kTolLin);
    CHECK(n1 <= std::sqrt(static_cast<double>(n)) * n2 + kTolLin);

    const ComplexMatrix u = random_unitary(rng, n);
    const ComplexMatrix v = random_unitary(rng, n);
    CHECK(nuclear_norm(u * x * v) == doctest::Approx(n1).epsilon(1e-10));

    // Route agreement: nuclear norm vs the sum over svd().singular_values.
    double sum = 0.0;
    for (double s : singular_values(x)) sum += s;
    CHECK(sum == doctest::Approx(n1).epsilon(1e-11));
    // Frobenius agrees with sqrt of the singular-value squares.
    double sq = 0.0;
    for (double s : singular_values(x)) sq += s * s;
    CHECK(std::sqrt(sq) == doctest::Approx(n2).epsilon(1e-11));
  }
}

TEST_CASE("singular_values: fixed examples and majorization") {
  const auto diag = singular_values(ComplexMatrix::diagonal({3.0, 4.0}));
  CHECK(diag[0] == doctest::Approx(4.0));
  CHECK(diag[1] == doctest::Approx(3.0));

  Rng rng(37);
  const ComplexMatrix u = random_unit_vector(rng, 4);
  const ComplexMatrix v = random_unit_vector(rng, 4);
  const auto rank1 = singular_values(u * v.adjoint());
  CHECK(rank1[0] == doctest::Approx(1.0).epsilon(1e-11));
  for (std::size_t i = 1; i < rank1.size(); ++i) CHECK(approx_zero(rank1[i]));

  const ComplexMatrix a = ComplexMatrix::diagonal({2.0, 1.0});
  const ComplexMatrix b = ComplexMatrix::diagonal({1.0, 2.0});
  const auto ab = singular_values(a * b);
  CHECK(ab[0] == doctest::Approx(2.0));
  CHECK(ab[1] == doctest::Approx(2.0));

  // sum_i s_i(AB) <= sum_i s_i(A) s_i(B)
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 6);
    const ComplexMatrix p = gaussian_matrix(rng, n, n);
    const ComplexMatrix q = gaussian_matrix(rng, n, n);
    const auto sp = singular_values(p);
    const auto sq = singular_values(q);
    const auto spq = singular_values(p * q);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      lhs += spq[i];
      rhs += sp[i] * sq[i];
    }
    CHECK(lhs <= rhs + 1e-9);
  }
}

TEST_CASE("matrix_sqrt_psd: square identity on random PSD input") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = random_psd(rng, 8);
    const ComplexMatrix s = matrix_sqrt_psd(h);
    CHECK(frobenius_distance(s * s, h) <= kTolLin * std::max(1.0, entrywise_frobenius(h)));
  }
}
