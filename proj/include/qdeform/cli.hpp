#pragma once

// Building blocks behind the `qdeform` command-line tool: the verification
// suite, the CSV sweeps and the Monte Carlo entangling-power report.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qdeform/entops.hpp"

namespace qdeform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// 17 significant digits, round-trips every double.
std::string format_double(double v);

// --- verify ----------------------------------------------------------------

struct CheckResult {
  std::string name;
  std::string metric;  // e.g. "max defect"
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool all_passed() const;
};

/// Runs every invariant group. `tolerance` is the base absolute tolerance
/// (default 1e-10); groups with a tighter nominal threshold keep their ratio to
/// it, so e.g. a 1e-13 group becomes 1e-13 · tolerance / 1e-10. Exact-zero and
/// statistical checks are not rescaled.
VerifyReport run_verify(double tolerance = kDefaultTolerance);
void print_report(const VerifyReport& report, std::ostream& out);

// --- sweep-time --------------------------------------------------------------

inline constexpr char kTimeCsvHeader[] = "q,t,E,E_tilde,ep,choi_vs_trace_dev,closed_vs_numeric_dev";

struct TimeSweepOptions {
  std::vector<double> q_list{1.0, 1.5, 2.0, 3.0};
  std::size_t points = 201;
  double periods = 2.0;
};

/// Rows ordered by (q, t); for each q, t spans [0, periods · 2π/α] inclusive.
std::vector<EntanglementRecord> sweep_time(const TimeSweepOptions& opts);
void write_time_csv(std::span<const EntanglementRecord> rows, std::ostream& out);

// --- sweep-q -----------------------------------------------------------------

inline constexpr char kQCsvHeader[] = "q,t_star,E_max,analytic_E_max,deviation";

struct QSweepRow {
  double q = 1.0;
  double t_star = 0.0;
  double e_max = 0.0;
  double analytic_e_max = 0.0;
  double deviation = 0.0;
};

/// q_points values evenly spaced over [q_min, q_max] inclusive.
std::vector<QSweepRow> sweep_q(double q_min, double q_max, std::size_t q_points);
void write_q_csv(std::span<const QSweepRow> rows, std::ostream& out);

// --- mc-ep -------------------------------------------------------------------

inline constexpr char kMcCsvHeader[] = "q,t,samples,seed,estimate,std_error,closed_form,z_score";
inline constexpr double kMcZLimit = 4.0;
/// Differences below this count as exact agreement (z = 0).
inline constexpr double kMcExactFloor = 1e-12;

struct McReport {
  double q = 1.0;
  double t = 0.0;
  std::uint64_t seed = 0;
  McEstimate mc;
  double closed_form = 0.0;  // (4/9) E_closed(q, t)
  double z_score = 0.0;
  bool passed() const;
};

McReport run_mc_ep(double q, double t, std::size_t samples, std::uint64_t seed,
                   unsigned threads = 1);
void print_mc_report(const McReport& report, std::ostream& out);
void write_mc_csv(const McReport& report, std::ostream& out);

}  // namespace qdeform::cli
