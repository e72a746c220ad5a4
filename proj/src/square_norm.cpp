#include "dianorm/square_norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "dianorm/decomposition.hpp"
#include "dianorm/errors.hpp"
#include "dianorm/norms.hpp"
#include "dianorm/random.hpp"

namespace dianorm {

namespace {

void check_v_operator(const BipartiteOperator& x, const ComplexMatrix& m, const char* who) {
  if (m.rows() != x.dim_v || m.cols() != x.dim_v)
    throw DimensionError(std::string(who) + ": operator must be dim_v x dim_v");
}

ComplexMatrix scaled_to_sqrt_n(ComplexMatrix m, std::size_t n, const char* who) {
  const double norm = entrywise_frobenius(m);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw DegenerateInputError(std::string(who) + ": numerically zero operator");
  const double factor = std::sqrt(static_cast<double>(n)) / norm;
  for (Complex& v : m.entries()) v *= factor;
  return m;
}

struct RunOutcome {
  double value = 0.0;
  ComplexMatrix a, b;
  int sweeps = 0;
  bool converged = false;
  std::vector<double> trace;
};

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

// One ascent run from the given starting a (b starts at the identity).
//
// Each half-step maximizes the sign-matrix lower bound
// Re Tr[U† (1 (x) a) x (1 (x) b)] exactly in one coordinate, with U refreshed
// to the polar factor of the current product. From a fresh identity b the
// b-step reduces to update_b (U = polar of x_a, so the gradient is
// Tr_W[sqrt(x_a† x_a)]); refreshing U afterwards keeps the objective
// nondecreasing, so the keep-best guard only fires at numerical
// stationarity. The svd of the product doubles as objective and polar factor.
RunOutcome run_seesaw(const BipartiteOperator& x, ComplexMatrix a0, const SeesawConfig& cfg) {
  const std::size_t n = x.dim_v;
  const double root_n = std::sqrt(static_cast<double>(n));

  RunOutcome run;
  run.a = std::move(a0);
  run.b = ComplexMatrix::identity(n);  // ||1_V||_2 = sqrt(n), already feasible
  run.converged = true;

  BipartiteOperator xa = apply_left_on_v(run.a, x);
  SvdResult dec = svd(xa.matrix);  // product with b = identity
  run.value = sum(dec.singular_values);
  run.trace.push_back(run.value);

  // Ascent step for one side. Returns false when the step was rejected or
  // the iterate degenerated; both end the run.
  auto half_step = [&](bool b_side) -> bool {
    const ComplexMatrix polar = dec.left * dec.right.adjoint();
    ComplexMatrix grad;  // d/dB of Re Tr[U† x_a (1 (x) b)] resp. the a-side mirror
    BipartiteOperator xb;
    if (b_side) {
      grad = partial_trace_w({x.dim_w, x.dim_v, polar.adjoint() * xa.matrix});
    } else {
      xb = apply_right_on_v(x, run.b);
      grad = partial_trace_w({x.dim_w, x.dim_v, xb.matrix * polar.adjoint()});
    }
    const double grad_norm = entrywise_frobenius(grad);
    if (grad_norm == 0.0 || !std::isfinite(grad_norm)) return false;  // collapsed product

    const ComplexMatrix next = Complex(root_n / grad_norm, 0.0) * grad.adjoint();
    const BipartiteOperator product =
        b_side ? apply_right_on_v(xa, next) : apply_left_on_v(next, xb);
    SvdResult next_dec = svd(product.matrix);
    const double next_value = sum(next_dec.singular_values);
    if (next_value < run.value) return false;  // keep-best guard

    if (b_side) {
      run.b = next;
    } else {
      run.a = next;
      xa = apply_left_on_v(run.a, x);
    }
    dec = std::move(next_dec);
    run.value = next_value;
    run.trace.push_back(run.value);
    return true;
  };

  for (int sweep = 0; sweep < cfg.max_iter; ++sweep) {
    const double sweep_start = run.value;
    const bool advanced = half_step(true) && half_step(false);
    run.sweeps = sweep + 1;
    if (!advanced) return run;
    const double improvement = run.value - sweep_start;
    if (improvement < cfg.rel_tol * std::max(run.value, 1e-300)) return run;
    if (sweep + 1 == cfg.max_iter) run.converged = false;
  }
  return run;
}

int thread_budget(int runs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("DIANORM_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) hw = static_cast<unsigned>(parsed);
  }
  return std::max(1, std::min<int>(static_cast<int>(hw), runs));
}

}  // namespace

double objective(const BipartiteOperator& x, const ComplexMatrix& a, const ComplexMatrix& b) {
  check_v_operator(x, a, "objective");
  check_v_operator(x, b, "objective");
  return nuclear_norm(apply_right_on_v(apply_left_on_v(a, x), b).matrix);
}

ComplexMatrix update_b(const BipartiteOperator& x, const ComplexMatrix& a) {
  check_v_operator(x, a, "update_b");
  const BipartiteOperator xa = apply_left_on_v(a, x);
  const BipartiteOperator root{x.dim_w, x.dim_v, matrix_sqrt_psd(gram(xa.matrix))};
  return scaled_to_sqrt_n(partial_trace_w(root), x.dim_v, "update_b");
}

ComplexMatrix update_a(const BipartiteOperator& x, const ComplexMatrix& b) {
  check_v_operator(x, b, "update_a");
  const BipartiteOperator xb = apply_right_on_v(x, b);
  const BipartiteOperator root{x.dim_w, x.dim_v, matrix_sqrt_psd(gram_right(xb.matrix))};
  return scaled_to_sqrt_n(partial_trace_w(root), x.dim_v, "update_a");
}

SquareNormResult square_norm(const BipartiteOperator& x, const SeesawConfig& cfg) {
  if (!x.matrix.is_finite()) throw NumericalError("square_norm: non-finite input");
  const std::size_t n = x.dim_v;

  SquareNormResult result;
  if (entrywise_frobenius(x.matrix) == 0.0) {
    result.value = 0.0;
    result.a_opt = ComplexMatrix::identity(n);
    result.b_opt = ComplexMatrix::identity(n);
    result.converged = true;
    result.objective_trace = {0.0};
    return result;
  }

  const int runs = std::max(cfg.restarts, 1);

  // Starting point per run: 0 = identity, 1 = partial-trace anchor,
  // the rest Gaussian with derived sub-seeds.
  auto initial_a = [&](int run) -> ComplexMatrix {
    if (run == 0) return ComplexMatrix::identity(n);
    if (run == 1) {
      const BipartiteOperator root{x.dim_w, x.dim_v, matrix_sqrt_psd(gram_right(x.matrix))};
      return scaled_to_sqrt_n(partial_trace_w(root), n, "square_norm");
    }
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(run)));
    return scaled_to_sqrt_n(gaussian_matrix(rng, n, n), n, "square_norm");
  };

  std::vector<RunOutcome> outcomes(runs);
  const int workers = thread_budget(runs);
  if (workers <= 1) {
    for (int run = 0; run < runs; ++run) outcomes[run] = run_seesaw(x, initial_a(run), cfg);
  } else {
    std::mutex next_mutex;
    int next = 0;
    auto worker = [&] {
      for (;;) {
        int run;
        {
          std::lock_guard<std::mutex> lock(next_mutex);
          if (next >= runs) return;
          run = next++;
        }
        outcomes[run] = run_seesaw(x, initial_a(run), cfg);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int best = 0;
  for (int run = 1; run < runs; ++run)
    if (outcomes[run].value > outcomes[best].value) best = run;

  RunOutcome& top = outcomes[best];
  result.value = top.value;
  result.a_opt = std::move(top.a);
  result.b_opt = std::move(top.b);
  result.iterations = top.sweeps;
  result.converged = top.converged;
  result.objective_trace = std::move(top.trace);
  return result;
}

double sampled_lower_bound(const BipartiteOperator& x, const SeesawConfig& cfg) {
  const std::size_t n = x.dim_v;
  if (entrywise_frobenius(x.matrix) == 0.0) return 0.0;
  Rng rng(derive_seed(cfg.seed, 0x6f7261636c65ull));  // stream disjoint from the restarts
  double best = 0.0;
  for (int i = 0; i < cfg.sample_count; ++i) {
    const ComplexMatrix a = scaled_to_sqrt_n(gaussian_matrix(rng, n, n), n, "sampled_lower_bound");
    const ComplexMatrix b = scaled_to_sqrt_n(gaussian_matrix(rng, n, n), n, "sampled_lower_bound");
    best = std::max(best, objective(x, a, b));
  }
  return best;
}

}  // namespace dianorm
