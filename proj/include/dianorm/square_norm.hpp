#pragma once

#include <cstdint>
#include <vector>

#include "dianorm/bipartite.hpp"
#include "dianorm/complex_matrix.hpp"

namespace dianorm {

struct SeesawConfig {
  double rel_tol = 1e-9;     // relative per-sweep improvement below which a run stops
  int max_iter = 1000;       // sweep cap per run
  int restarts = 16;         // total runs; see square_norm() for the schedule
  std::uint64_t seed = 1;    // base seed; each run derives its own stream
  int sample_count = 10000;  // pair draws used by sampled_lower_bound
};

/// Outcome of the alternating maximization. `value` is a certified lower
/// bound on the square norm: every reported objective was evaluated at
/// feasible (a, b) with ||a||_2 = ||b||_2 = sqrt(dim_v). Closeness to the
/// true supremum is established only through the analytic families and the
/// sampling oracle, not by this routine.
struct SquareNormResult {
  double value = 0.0;
  ComplexMatrix a_opt;
  ComplexMatrix b_opt;
  int iterations = 0;    // sweeps executed by the best run
  bool converged = false;  // false only when the best run hit max_iter
  std::vector<double> objective_trace;  // accepted objectives of the best run
};

/// ||(1_W (x) a) x (1_W (x) b)||_1, no normalization applied.
double objective(const BipartiteOperator& x, const ComplexMatrix& a, const ComplexMatrix& b);

/// Closed-form ascent step in b: sqrt(n) Tr_W[sqrt(x_a† x_a)] / ||...||_2
/// with x_a = (1 (x) a) x. The result is PSD with ||.||_2 = sqrt(n).
ComplexMatrix update_b(const BipartiteOperator& x, const ComplexMatrix& a);

/// Mirror step in a, applied to x_b = x (1 (x) b): uses Tr_W[sqrt(x_b x_b†)].
ComplexMatrix update_a(const BipartiteOperator& x, const ComplexMatrix& b);

/// Alternating maximization with restarts. Run schedule: run 0 starts from
/// a = b = identity (which alone certifies the ||x||_1 lower bound); run 1
/// starts from a proportional to Tr_W[sqrt(x x†)] (the partial-trace
/// anchor); remaining runs draw Gaussian a. Each sweep takes a closed-form
/// ascent step in b then in a — from a fresh identity b the step is exactly
/// update_b, and later steps refresh the sign-matrix factor at the current
/// iterate so the objective is nondecreasing — under a keep-best guard: a
/// step that would decrease the objective is rejected and the run stops.
/// Restarts execute in parallel, capped by the DIANORM_THREADS environment
/// variable.
SquareNormResult square_norm(const BipartiteOperator& x, const SeesawConfig& cfg = {});

/// Independent sampling oracle: max objective over sample_count Gaussian
/// pairs normalized to ||.||_2 = sqrt(n). Always a valid lower bound on the
/// square norm; deterministic given cfg.seed.
double sampled_lower_bound(const BipartiteOperator& x, const SeesawConfig& cfg = {});

}  // namespace dianorm
