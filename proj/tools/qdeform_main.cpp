// qdeform: verification and sweep tool for the coproduct two-qubit model.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>

#include "qdeform/cli.hpp"
#include "qdeform/dynamics.hpp"

namespace {

using namespace qdeform;

// Returns nullptr (after printing) if the file cannot be opened.
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  auto file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return nullptr;
  }
  return file;
}

template <class Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return std::cout ? cli::kExitOk : cli::kExitFailure;
  }
  auto file = open_output(path);
  if (!file) return cli::kExitFailure;
  fn(*file);
  file->close();
  if (!*file) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return cli::kExitFailure;
  }
  return cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator entanglement of the U_q(su(2)) coproduct two-qubit model"};
  app.require_subcommand(1);

  double tolerance = kDefaultTolerance;
  auto* verify = app.add_subcommand("verify", "Run every invariant check; exit 0 iff all pass");
  verify->add_option("--tolerance", tolerance,
                     "Base absolute tolerance. Checks with a tighter nominal threshold are "
                     "rescaled by tolerance/1e-10")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  cli::TimeSweepOptions time_opts;
  std::string time_out = "-";
  auto* sweep_time = app.add_subcommand("sweep-time", "E(U(t)) over time for a list of q values");
  sweep_time->add_option("--q", time_opts.q_list, "Comma-separated q values (default 1,1.5,2,3)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep_time->add_option("--points", time_opts.points, "Time points per q (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
      ->capture_default_str();
  sweep_time->add_option("--periods", time_opts.periods, "Span in units of 2pi/alpha")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_time->add_option("--out", time_out, "Output CSV path ('-' for stdout)")->capture_default_str();

  double q_min = 1.0, q_max = 5.0;
  std::size_t q_points = 50;
  std::string q_out = "-";
  auto* sweep_q = app.add_subcommand("sweep-q", "Maximum of E(U(t)) over t as a function of q");
  sweep_q->add_option("--min", q_min, "Smallest q (> 0)")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_q->add_option("--max", q_max, "Largest q (> min)")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_q->add_option("--points", q_points, "Number of q values (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
      ->capture_default_str();
  sweep_q->add_option("--out", q_out, "Output CSV path ('-' for stdout)")->capture_default_str();

  double mc_q = 2.0;
  std::optional<double> mc_t, mc_phase;
  std::size_t mc_samples = 100000;
  std::uint64_t mc_seed = 42;
  unsigned mc_threads = 1;
  std::string mc_out;
  auto* mc = app.add_subcommand("mc-ep", "Monte Carlo entangling power vs (4/9) E_closed");
  mc->add_option("--q", mc_q, "Deformation parameter")->check(CLI::PositiveNumber)->capture_default_str();
  auto* t_opt = mc->add_option("--t", mc_t, "Evolution time");
  auto* phase_opt = mc->add_option("--alpha-t", mc_phase, "Evolution time given as the phase alpha*t");
  t_opt->excludes(phase_opt);
  mc->add_option("--samples", mc_samples, "Number of Haar product samples (>= 100)")
      ->check(CLI::Range(std::size_t{100}, std::size_t{1} << 40))
      ->capture_default_str();
  mc->add_option("--seed", mc_seed, "64-bit seed")->capture_default_str();
  mc->add_option("--threads", mc_threads, "Worker threads (result is independent of this)")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  mc->add_option("--out", mc_out, "Optional CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (*verify) {
      const auto report = cli::run_verify(tolerance);
      cli::print_report(report, std::cout);
      return report.all_passed() ? cli::kExitOk : cli::kExitFailure;
    }
    if (*sweep_time) {
      const auto rows = cli::sweep_time(time_opts);
      return with_output(time_out, [&](std::ostream& os) { cli::write_time_csv(rows, os); });
    }
    if (*sweep_q) {
      if (!(q_max > q_min)) {
        std::cerr << "error: --max must exceed --min\n";
        return cli::kExitUsage;
      }
      const auto rows = cli::sweep_q(q_min, q_max, q_points);
      return with_output(q_out, [&](std::ostream& os) { cli::write_q_csv(rows, os); });
    }
    if (*mc) {
      double t = mc_t.value_or(0.0);
      if (mc_phase) t = *mc_phase / DeformParam(mc_q).alpha();
      const auto report = cli::run_mc_ep(mc_q, t, mc_samples, mc_seed, mc_threads);
      cli::print_mc_report(report, std::cout);
      if (!mc_out.empty()) {
        const int rc = with_output(mc_out, [&](std::ostream& os) { cli::write_mc_csv(report, os); });
        if (rc != cli::kExitOk) return rc;
      }
      return report.passed() ? cli::kExitOk : cli::kExitFailure;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
