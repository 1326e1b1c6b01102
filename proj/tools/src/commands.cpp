#include "picknorm_cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "picknorm/compute.hpp"
#include "picknorm/error.hpp"
#include "picknorm/gleason.hpp"
#include "picknorm/kernels.hpp"
#include "picknorm_cli/problem_io.hpp"
#include "picknorm_cli/result_io.hpp"
#include "picknorm_cli/verify.hpp"

namespace picknorm::cli {

namespace {

int cmd_compute(const std::string& path, std::optional<double> tol, bool csv, bool timing,
                std::ostream& out) {
  InterpolationProblem problem = load_problem_file(path);
  if (tol) {
    if (!(*tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "--tol must be positive");
    problem.tolerance = *tol;
  }
  const auto start = std::chrono::steady_clock::now();
  const NormResult result = compute_np_norm(problem);
  const auto stop = std::chrono::steady_clock::now();
  if (csv) {
    out << result_csv_header() << '\n' << result_to_csv_row(problem, result) << '\n';
    return kExitOk;
  }
  ResultConfig config;
  config.format = "json";
  config.tolerance_overridden = tol.has_value();
  if (timing) config.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  out << result_to_json(problem, result, config).dump(2) << '\n';
  return kExitOk;
}

int cmd_gleason(const std::string& path, bool theorem4, std::ostream& out) {
  const InterpolationProblem problem = load_problem_file(path, false);
  const gleason::GleasonReport report =
      gleason::part_partition(problem.backend, problem.sites, problem.algebra);
  std::optional<gleason::Theorem4Report> t4;
  if (theorem4) t4 = gleason::theorem4_check(problem.backend, problem.sites, problem.algebra);
  out << gleason_to_json(report, t4 ? &*t4 : nullptr).dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (!is_suite(suite)) {
    err << "error: unknown suite '" << suite << "'; expected one of:";
    for (const auto& s : suite_names()) err << ' ' << s;
    err << '\n';
    return kExitValidation;
  }
  const VerifyReport report = run_suite(suite, seed);
  out << format_report(suite, report);
  return report.passed() ? kExitOk : kExitValidation;
}

int cmd_kernel_probe(int lmax, std::ostream& out) {
  if (lmax < 1) throw Error(ErrorCode::kInvalidArgument, "--lmax must be at least 1");
  out << "l,grid,l1_norm\n";
  for (int l = 1; l <= lmax; ++l) {
    int grid = 64;
    while (grid < 64 * l) grid *= 2;
    const double norm = kernels::kernel_l1_norm(l, grid);
    out << l << ',' << grid << ',' << std::setprecision(12) << norm << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nevanlinna-Pick norm computations for commutative Banach algebras", "picknorm"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute the NP norm bracket of a problem file");
  std::string compute_file;
  std::optional<double> tol;
  bool json_flag = false;
  bool csv_flag = false;
  bool timing = false;
  compute->add_option("file", compute_file, "problem JSON file")->required();
  compute->add_option("--tol", tol, "override the problem tolerance");
  auto* json_opt = compute->add_flag("--json", json_flag, "emit a JSON result document (default)");
  compute->add_flag("--csv", csv_flag, "emit a CSV row")->excludes(json_opt);
  compute->add_flag("--timing", timing, "record wall-clock time in timing_ms");

  auto* gleason = app.add_subcommand("gleason", "Gleason distances and parts of a site set");
  std::string gleason_file;
  bool theorem4 = false;
  gleason->add_option("file", gleason_file, "problem JSON file (targets optional)")->required();
  gleason->add_flag("--theorem4", theorem4, "append the NP-versus-distance consistency check");

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  std::uint64_t seed = 1;
  verify->add_option("suite", suite, "remark1, monotone_feasibility, oracle_equivalence, kernels, "
                                     "gleason, np_infty or all")
      ->required();
  verify->add_option("--seed", seed, "random seed");

  auto* probe = app.add_subcommand("kernel-probe", "print ‖V_l‖₁ for l = 1..lmax as CSV");
  int lmax = 16;
  probe->add_option("--lmax", lmax, "largest kernel order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*compute) return cmd_compute(compute_file, tol, csv_flag, timing, out);
    if (*gleason) return cmd_gleason(gleason_file, theorem4, out);
    if (*verify) return cmd_verify(suite, seed, out, err);
    if (*probe) return cmd_kernel_probe(lmax, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitValidation : kExitStall;
  }
  return kExitValidation;
}

}  // namespace picknorm::cli
