// Command-line front end: load operators, run norms, the square-norm
// estimator, saturation certifiers and generators, and emit JSON reports.
//
// Exit codes: 0 success/saturated, 1 not saturated, 2 input error,
// 3 numerical failure, 4 I/O error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dianorm/bipartite.hpp"
#include "dianorm/certify.hpp"
#include "dianorm/decomposition.hpp"
#include "dianorm/errors.hpp"
#include "dianorm/matrix_io.hpp"
#include "dianorm/norms.hpp"
#include "dianorm/random.hpp"
#include "dianorm/square_norm.hpp"

namespace {

using dianorm::BipartiteOperator;
using dianorm::ComplexMatrix;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNotSaturated = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void emit(const std::string& command, const json& digest, const json& config, json results,
          const Timer& timer) {
  json report{{"command", command},
              {"input_digest", digest},
              {"config", config},
              {"results", std::move(results)},
              {"wall_time_s", timer.seconds()}};
  std::cout << report.dump(2) << std::endl;
}

std::optional<std::size_t> as_dim(int flag) {
  if (flag <= 0) return std::nullopt;
  return static_cast<std::size_t>(flag);
}

struct CommonOptions {
  int dim_w = 0;
  int dim_v = 0;
  double tol = dianorm::kCertifyTol;
  double rel_tol = 1e-9;
  int restarts = 16;
  int max_iter = 1000;
  std::uint64_t seed = 1;
  int samples = 0;
};

dianorm::SeesawConfig seesaw_config(const CommonOptions& opt) {
  dianorm::SeesawConfig cfg;
  cfg.rel_tol = opt.rel_tol;
  cfg.restarts = opt.restarts;
  cfg.max_iter = opt.max_iter;
  cfg.seed = opt.seed;
  if (opt.samples > 0) cfg.sample_count = opt.samples;
  return cfg;
}

int run_norm(const std::string& file, const std::string& which) {
  Timer timer;
  const auto loaded = dianorm::load_matrix_file(file);
  double value = 0.0;
  if (which == "nuclear")
    value = dianorm::nuclear_norm(loaded.matrix);
  else if (which == "frobenius")
    value = dianorm::frobenius_norm(loaded.matrix);
  else
    value = dianorm::spectral_norm(loaded.matrix);
  emit("norm", dianorm::file_digest(file), {{"file", file}, {"which", which}},
       {{"value", value}, {"rows", loaded.matrix.rows()}, {"cols", loaded.matrix.cols()}}, timer);
  return kExitOk;
}

int run_squarenorm(const std::string& file, const CommonOptions& opt) {
  Timer timer;
  const auto loaded = dianorm::load_matrix_file(file);
  const BipartiteOperator x = dianorm::as_bipartite(loaded, as_dim(opt.dim_w), as_dim(opt.dim_v));
  const dianorm::SeesawConfig cfg = seesaw_config(opt);
  const dianorm::SquareNormResult res = dianorm::square_norm(x, cfg);
  const double nuclear = dianorm::nuclear_norm(x.matrix);
  const double n = static_cast<double>(x.dim_v);

  json results{{"value", res.value},
               {"nuclear", nuclear},
               {"upper_bound", n * nuclear},
               {"ratio", nuclear > 0.0 ? res.value / nuclear : 0.0},
               {"iterations", res.iterations},
               {"converged", res.converged},
               {"objective_trace", res.objective_trace},
               {"a_opt", dianorm::matrix_to_json(res.a_opt)},
               {"b_opt", dianorm::matrix_to_json(res.b_opt)}};
  if (opt.samples > 0) results["sampled_lower_bound"] = dianorm::sampled_lower_bound(x, cfg);

  emit("squarenorm", dianorm::file_digest(file),
       {{"file", file},
        {"dim_w", x.dim_w},
        {"dim_v", x.dim_v},
        {"restarts", cfg.restarts},
        {"max_iter", cfg.max_iter},
        {"rel_tol", cfg.rel_tol},
        {"seed", cfg.seed},
        {"samples", opt.samples}},
       std::move(results), timer);
  return kExitOk;
}

json certificate_to_json(const dianorm::SaturationCertificate& cert) {
  json j{{"verdict", dianorm::to_string(cert.verdict)},
         {"lower_residual", cert.lower_residual},
         {"upper_residual", cert.upper_residual},
         {"left_partial", dianorm::matrix_to_json(cert.left_partial)},
         {"right_partial", dianorm::matrix_to_json(cert.right_partial)}};
  if (cert.has_witnesses()) {
    j["psi"] = dianorm::matrix_to_json(cert.psi);
    j["phi"] = dianorm::matrix_to_json(cert.phi);
  }
  return j;
}

int run_certify(const std::string& file, const std::string& which, const CommonOptions& opt) {
  Timer timer;
  const auto loaded = dianorm::load_matrix_file(file);
  const BipartiteOperator x = dianorm::as_bipartite(loaded, as_dim(opt.dim_w), as_dim(opt.dim_v));

  json results;
  bool saturated = false;
  if (which == "lower" || which == "both") {
    const auto cert = dianorm::certify_lower(x, opt.tol);
    results["lower"] = certificate_to_json(cert);
    saturated |= cert.verdict == dianorm::SaturationVerdict::LowerSaturated;
  }
  if (which == "upper" || which == "both") {
    const auto cert = dianorm::certify_upper(x, opt.tol);
    results["upper"] = certificate_to_json(cert);
    saturated |= cert.verdict == dianorm::SaturationVerdict::UpperSaturated;
  }
  results["nuclear"] = dianorm::nuclear_norm(x.matrix);
  results["saturated"] = saturated;

  emit("certify", dianorm::file_digest(file),
       {{"file", file}, {"which", which}, {"dim_w", x.dim_w}, {"dim_v", x.dim_v}, {"tol", opt.tol}},
       std::move(results), timer);
  return saturated ? kExitOk : kExitNotSaturated;
}

int run_generate(const std::string& family, const CommonOptions& opt, int kraus_count,
                 const std::string& y_file, int psi_index, int phi_index,
                 const std::string& out_file) {
  Timer timer;
  if (opt.dim_w <= 0 || opt.dim_v <= 0)
    throw dianorm::ParseError("generate: --dim-w and --dim-v must be positive");
  const auto dw = static_cast<std::size_t>(opt.dim_w);
  const auto dv = static_cast<std::size_t>(opt.dim_v);

  BipartiteOperator out;
  if (family == "cptp") {
    if (kraus_count <= 0) throw dianorm::ParseError("generate: --kraus-count must be positive");
    out = dianorm::gen_cptp_choi(dw, dv, static_cast<std::size_t>(kraus_count), opt.seed);
  } else if (family == "upper") {
    dianorm::Rng rng(dianorm::derive_seed(opt.seed, 0x75ull));
    ComplexMatrix y = y_file.empty() ? dianorm::gaussian_matrix(rng, dw, dw)
                                     : dianorm::load_matrix_file(y_file).matrix;
    const ComplexMatrix psi = psi_index >= 0
                                  ? dianorm::unit_basis(dv, static_cast<std::size_t>(psi_index))
                                  : dianorm::random_unit_vector(rng, dv);
    const ComplexMatrix phi = phi_index >= 0
                                  ? dianorm::unit_basis(dv, static_cast<std::size_t>(phi_index))
                                  : dianorm::random_unit_vector(rng, dv);
    out = dianorm::gen_upper_saturator(y, psi, phi);
    if (out.dim_w != dw)
      throw dianorm::ParseError("generate: Y must be dim_w x dim_w");
  } else {  // gaussian
    dianorm::Rng rng(dianorm::derive_seed(opt.seed, 0x67ull));
    out = BipartiteOperator(dw, dv, dianorm::gaussian_matrix(rng, dw * dv, dw * dv));
  }

  dianorm::save_matrix_file(out_file, out.matrix, out.dim_w, out.dim_v);
  emit("generate", dianorm::file_digest(out_file),
       {{"family", family},
        {"dim_w", out.dim_w},
        {"dim_v", out.dim_v},
        {"seed", opt.seed},
        {"kraus_count", kraus_count},
        {"out", out_file}},
       {{"rows", out.matrix.rows()}, {"cols", out.matrix.cols()}}, timer);
  return kExitOk;
}

int run_holder(const std::string& file_a, const std::string& file_b, const std::string& file_c,
               const CommonOptions& opt) {
  Timer timer;
  const ComplexMatrix a = dianorm::load_matrix_file(file_a).matrix;
  const ComplexMatrix b = dianorm::load_matrix_file(file_b).matrix;

  json digests{{"a", dianorm::file_digest(file_a)}, {"b", dianorm::file_digest(file_b)}};
  json results;
  bool saturated = false;
  if (file_c.empty()) {
    const auto rep = dianorm::holder_saturation(a, b, opt.tol);
    saturated = rep.saturated;
    results = {{"equality_gap", rep.equality_gap},
               {"singular_check", rep.singular_check},
               {"isometry_residual", rep.isometry_residual},
               {"isometry_check", rep.isometry_residual <= opt.tol},
               {"saturated", rep.saturated}};
  } else {
    const ComplexMatrix c = dianorm::load_matrix_file(file_c).matrix;
    digests["c"] = dianorm::file_digest(file_c);
    const auto rep = dianorm::iterated_holder(a, b, c, opt.tol);
    saturated = rep.saturated;
    results = {{"equality_gap", rep.equality_gap},
               {"right_vectors_ok", rep.right_vectors_ok},
               {"left_vectors_ok", rep.left_vectors_ok},
               {"saturated", rep.saturated}};
  }

  emit("holder", digests,
       {{"a", file_a}, {"b", file_b}, {"c", file_c.empty() ? json() : json(file_c)},
        {"tol", opt.tol}},
       std::move(results), timer);
  return saturated ? kExitOk : kExitNotSaturated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-norm / diamond-norm toolkit for bipartite operators"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string file, which, family, y_file, out_file;
  std::string file_b, file_c;
  int kraus_count = 2;
  int psi_index = -1;
  int phi_index = -1;

  auto add_dims = [&](CLI::App* cmd) {
    cmd->add_option("--dim-w", opt.dim_w, "dimension of the W factor");
    cmd->add_option("--dim-v", opt.dim_v, "dimension of the V factor");
  };

  CLI::App* norm = app.add_subcommand("norm", "Schatten norm of a matrix file");
  norm->add_option("file", file)->required();
  norm->add_option("--which", which, "nuclear|frobenius|spectral")
      ->required()
      ->check(CLI::IsMember({"nuclear", "frobenius", "spectral"}));

  CLI::App* sqn = app.add_subcommand("squarenorm", "square-norm estimate by alternating ascent");
  sqn->add_option("file", file)->required();
  add_dims(sqn);
  sqn->add_option("--restarts", opt.restarts);
  sqn->add_option("--max-iter", opt.max_iter);
  sqn->add_option("--tol", opt.rel_tol, "relative per-sweep improvement threshold");
  sqn->add_option("--seed", opt.seed);
  sqn->add_option("--samples", opt.samples, "also report the sampling oracle with this many draws");

  CLI::App* certify = app.add_subcommand("certify", "saturation certificates for the norm chain");
  certify->add_option("file", file)->required();
  add_dims(certify);
  certify->add_option("--which", which, "lower|upper|both")
      ->default_val("both")
      ->check(CLI::IsMember({"lower", "upper", "both"}));
  certify->add_option("--tol", opt.tol);

  CLI::App* generate = app.add_subcommand("generate", "write a matrix file from a family");
  generate->add_option("--family", family, "cptp|upper|gaussian")
      ->required()
      ->check(CLI::IsMember({"cptp", "upper", "gaussian"}));
  add_dims(generate);
  generate->add_option("--kraus-count", kraus_count);
  generate->add_option("--seed", opt.seed);
  generate->add_option("--y-file", y_file, "W-factor operator for the upper family");
  generate->add_option("--psi-index", psi_index, "basis witness index (default: random)");
  generate->add_option("--phi-index", phi_index, "basis witness index (default: random)");
  generate->add_option("--out", out_file)->required();

  CLI::App* holder = app.add_subcommand("holder", "Hoelder saturation report");
  holder->add_option("fileA", file)->required();
  holder->add_option("fileB", file_b)->required();
  holder->add_option("fileC", file_c);
  holder->add_option("--tol", opt.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (norm->parsed()) return run_norm(file, which);
    if (sqn->parsed()) return run_squarenorm(file, opt);
    if (certify->parsed()) return run_certify(file, which, opt);
    if (generate->parsed())
      return run_generate(family, opt, kraus_count, y_file, psi_index, phi_index, out_file);
    if (holder->parsed()) return run_holder(file, file_b, file_c, opt);
  } catch (const dianorm::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const dianorm::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const dianorm::Error& e) {
    // parse, dimension, degenerate and not-PSD errors are all input errors
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
