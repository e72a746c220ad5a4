#include <doctest.h>

#include <cmath>

#include "dianorm/bipartite.hpp"
#include "dianorm/certify.hpp"
#include "dianorm/complex_matrix.hpp"
#include "dianorm/decomposition.hpp"
#include "dianorm/errors.hpp"
#include "dianorm/norms.hpp"
#include "dianorm/random.hpp"
#include "dianorm/square_norm.hpp"
#include "test_helpers.hpp"

using namespace dianorm;
using namespace dianorm::testing;

namespace {

BipartiteOperator omega_projector(std::size_t n) {
  ComplexMatrix m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i * n + i, j * n + j) = 1.0;
  return {n, n, std::move(m)};
}

BipartiteOperator random_bipartite(Rng& rng, std::size_t dw, std::size_t dv) {
  return {dw, dv, gaussian_matrix(rng, dw * dv, dw * dv)};
}

SeesawConfig quick_config(int restarts = 8) {
  SeesawConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iter = 200;
  return cfg;
}

}  // namespace

TEST_CASE("objective: identity factors recover the nuclear norm") {
  Rng rng(211);
  const BipartiteOperator x = random_bipartite(rng, 2, 3);
  const ComplexMatrix one = ComplexMatrix::identity(3);
  CHECK(objective(x, one, one) == doctest::Approx(nuclear_norm(x.matrix)).epsilon(1e-12));

  const BipartiteOperator idop{2, 2, ComplexMatrix::identity(4)};
  const ComplexMatrix one2 = ComplexMatrix::identity(2);
  CHECK(objective(idop, one2, one2) == doctest::Approx(4.0).epsilon(1e-12));

  CHECK(objective(omega_projector(2), one2, one2) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(objective(idop, ComplexMatrix::identity(3), one2), DimensionError);
}

TEST_CASE("update_b: closed-form examples") {
  const ComplexMatrix one2 = ComplexMatrix::identity(2);

  // Maximally entangled input: Tr_W sqrt(X†X) is proportional to 1.
  CHECK(frobenius_distance(update_b(omega_projector(2), one2), one2) <= 1e-10);

  // Product input Y (x) psi phi†: the update lands on sqrt(n) phi phi†.
  Rng rng(223);
  const ComplexMatrix y = gaussian_matrix(rng, 3, 3);
  const ComplexMatrix psi = random_unit_vector(rng, 2);
  const ComplexMatrix phi = random_unit_vector(rng, 2);
  const BipartiteOperator x = gen_upper_saturator(y, psi, phi);
  const ComplexMatrix expected = Complex(std::sqrt(2.0), 0.0) * (phi * phi.adjoint());
  CHECK(frobenius_distance(update_b(x, one2), expected) <= 1e-9);

  const BipartiteOperator idop{2, 2, ComplexMatrix::identity(4)};
  CHECK(frobenius_distance(update_b(idop, one2), one2) <= 1e-10);

  CHECK_THROWS_AS(update_b(idop, ComplexMatrix(2, 2)), DegenerateInputError);
}

TEST_CASE("update_a: mirrors update_b") {
  const ComplexMatrix one2 = ComplexMatrix::identity(2);
  const BipartiteOperator idop{2, 2, ComplexMatrix::identity(4)};
  CHECK(frobenius_distance(update_a(idop, one2), one2) <= 1e-10);

  Rng rng(227);
  const ComplexMatrix y = gaussian_matrix(rng, 3, 3);
  const ComplexMatrix psi = random_unit_vector(rng, 2);
  const ComplexMatrix phi = random_unit_vector(rng, 2);
  const BipartiteOperator x = gen_upper_saturator(y, psi, phi);
  const ComplexMatrix b = Complex(std::sqrt(2.0), 0.0) * (phi * phi.adjoint());
  const ComplexMatrix expected = Complex(std::sqrt(2.0), 0.0) * (psi * psi.adjoint());
  CHECK(frobenius_distance(update_a(x, b), expected) <= 1e-9);

  CHECK(frobenius_distance(update_a(omega_projector(2), one2), one2) <= 1e-10);
}

TEST_CASE("update outputs: PSD with Frobenius norm sqrt(n), exactly renormalized") {
  Rng rng(229);
  for (int trial = 0; trial < 8; ++trial) {
    const BipartiteOperator x = random_bipartite(rng, 2, 3);
    const ComplexMatrix a = gaussian_matrix(rng, 3, 3);
    const ComplexMatrix b = update_b(x, a);
    CHECK(entrywise_frobenius(b) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    const auto eig = herm_eig(b);
    CHECK(eig.eigenvalues.back() >= -kTolPsdRel * std::max(1.0, eig.eigenvalues.front()));

    const ComplexMatrix a2 = update_a(x, b);
    CHECK(entrywise_frobenius(a2) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  }
}

TEST_CASE("square_norm: analytic families") {
  // Choi of the identity channel: lower saturation, value = ||X||_1 = 2.
  const auto id = square_norm(omega_projector(2), quick_config());
  CHECK(id.value == doctest::Approx(2.0).epsilon(1e-9));

  // Upper saturator with Y = 1_2: value = n ||X||_1 = 4.
  const BipartiteOperator upper =
      gen_upper_saturator(ComplexMatrix::identity(2), unit_basis(2, 0), unit_basis(2, 1));
  const auto up = square_norm(upper, quick_config());
  CHECK(up.value == doctest::Approx(4.0).epsilon(1e-9));

  // Identity on W (x) V: ||X||_1 = 4 and the lower bound is saturated.
  const BipartiteOperator idop{2, 2, ComplexMatrix::identity(4)};
  const auto flat = square_norm(idop, quick_config());
  CHECK(flat.value == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("square_norm: zero operator short-circuits") {
  const BipartiteOperator zero{2, 2, ComplexMatrix(4, 4)};
  const auto res = square_norm(zero, quick_config());
  CHECK(res.value == 0.0);
  CHECK(res.converged);
  CHECK(frobenius_distance(res.a_opt, ComplexMatrix::identity(2)) == 0.0);
  CHECK(entrywise_frobenius(res.b_opt) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("square_norm: result invariants on random operators") {
  Rng rng(233);
  for (int trial = 0; trial < 6; ++trial) {
    const BipartiteOperator x = random_bipartite(rng, 2, 2);
    const auto res = square_norm(x, quick_config());
    const double nuc = nuclear_norm(x.matrix);
    const double n = 2.0;

    CHECK(entrywise_frobenius(res.a_opt) == doctest::Approx(std::sqrt(n)).epsilon(1e-12));
    CHECK(entrywise_frobenius(res.b_opt) == doctest::Approx(std::sqrt(n)).epsilon(1e-12));
    CHECK(std::abs(res.value - objective(x, res.a_opt, res.b_opt)) <= kTolLin);
    CHECK(res.value >= nuc - kTolLin);
    CHECK(res.value <= n * nuc + 1e-7 * nuc);

    // Trace is nondecreasing, exactly.
    for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
      CHECK(res.objective_trace[i] >= res.objective_trace[i - 1]);
  }
}

TEST_CASE("square_norm: absolute homogeneity under the same seed") {
  Rng rng(239);
  const BipartiteOperator x = random_bipartite(rng, 2, 2);
  const auto base = square_norm(x, quick_config());
  for (const Complex c : {Complex(-2.0, 0.0), Complex(0.0, 3.0), Complex(0.5, -0.5)}) {
    const BipartiteOperator cx{2, 2, c * x.matrix};
    const auto scaled = square_norm(cx, quick_config());
    CHECK(scaled.value ==
          doctest::Approx(std::abs(c) * base.value).epsilon(1e-7));
  }
}

TEST_CASE("square_norm: invariance under local unitaries") {
  Rng rng(241);
  SeesawConfig cfg = quick_config(24);
  for (int trial = 0; trial < 3; ++trial) {
    const BipartiteOperator x = random_bipartite(rng, 2, 2);
    const ComplexMatrix u = random_unitary(rng, 2);
    const ComplexMatrix v = random_unitary(rng, 2);
    const ComplexMatrix p = random_unitary(rng, 2);
    const ComplexMatrix q = random_unitary(rng, 2);
    const BipartiteOperator moved{2, 2, kron(u, p) * x.matrix * kron(v, q)};
    const auto lhs = square_norm(moved, cfg);
    const auto rhs = square_norm(x, cfg);
    CHECK(lhs.value == doctest::Approx(rhs.value).epsilon(1e-6));
  }
}

TEST_CASE("square_norm: dominates the sampling oracle and the analytic anchors") {
  Rng rng(251);
  SeesawConfig cfg = quick_config();
  cfg.sample_count = 2000;
  for (int trial = 0; trial < 5; ++trial) {
    const BipartiteOperator x = random_bipartite(rng, 2, 2);
    const auto res = square_norm(x, cfg);
    CHECK(res.value >= sampled_lower_bound(x, cfg) - kTolLin);

    // Anchors: sqrt(n) || Tr_W sqrt(X†X) ||_2 and sqrt(n) || Tr_W sqrt(XX†) ||_2.
    const double n = 2.0;
    const ComplexMatrix right =
        partial_trace_w({x.dim_w, x.dim_v, matrix_sqrt_psd(gram(x.matrix))});
    const ComplexMatrix left =
        partial_trace_w({x.dim_w, x.dim_v, matrix_sqrt_psd(gram_right(x.matrix))});
    const double anchor_r = std::sqrt(n) * entrywise_frobenius(right);
    const double anchor_l = std::sqrt(n) * entrywise_frobenius(left);
    CHECK(res.value >= std::max(anchor_r, anchor_l) - 1e-10);
  }
}

TEST_CASE("sampled_lower_bound: deterministic and within the chain") {
  Rng rng(257);
  const BipartiteOperator x = random_bipartite(rng, 2, 2);
  SeesawConfig cfg;
  cfg.sample_count = 500;
  const double first = sampled_lower_bound(x, cfg);
  const double second = sampled_lower_bound(x, cfg);
  CHECK(first == second);
  CHECK(first <= 2.0 * nuclear_norm(x.matrix) + 1e-9);

  const BipartiteOperator idop{2, 2, ComplexMatrix::identity(4)};
  CHECK(sampled_lower_bound(idop, cfg) <= 4.0 + 1e-9);

  const BipartiteOperator upper =
      gen_upper_saturator(ComplexMatrix::identity(2), unit_basis(2, 0), unit_basis(2, 0));
  CHECK(sampled_lower_bound(upper, cfg) <= 2.0 * nuclear_norm(upper.matrix) + 1e-9);
}

TEST_CASE("square_norm: deterministic given the seed") {
  Rng rng(263);
  const BipartiteOperator x = random_bipartite(rng, 2, 3);
  const auto a = square_norm(x, quick_config());
  const auto b = square_norm(x, quick_config());
  CHECK(a.value == b.value);
  CHECK(a.a_opt.entries() == b.a_opt.entries());
  CHECK(a.objective_trace == b.objective_trace);
}
