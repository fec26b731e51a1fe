#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "analytic_emax.hpp"
#include "qdeform/cli.hpp"
#include "qdeform/dynamics.hpp"

namespace qdeform::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<EntanglementRecord> sweep_time(const TimeSweepOptions& opts) {
  if (opts.points < 2) throw std::invalid_argument("sweep-time: need at least 2 time points");
  if (!(opts.periods > 0.0) || !std::isfinite(opts.periods)) {
    throw std::invalid_argument("sweep-time: periods must be positive");
  }
  if (opts.q_list.empty()) throw std::invalid_argument("sweep-time: empty q list");
  std::vector<DeformParam> qs;
  for (double q : opts.q_list) qs.emplace_back(q);

  std::vector<EntanglementRecord> rows;
  rows.reserve(qs.size() * opts.points);
  for (const auto& q : qs) {
    const double t_end = opts.periods * evolution_period(q);
    for (std::size_t k = 0; k < opts.points; ++k) {
      const double t = t_end * static_cast<double>(k) / static_cast<double>(opts.points - 1);
      rows.push_back(entanglement_record(q, t));
    }
  }
  return rows;
}

void write_time_csv(std::span<const EntanglementRecord> rows, std::ostream& out) {
  out << kTimeCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.q) << ',' << format_double(r.t) << ',' << format_double(r.e) << ','
        << format_double(r.e_tilde) << ',' << format_double(r.ep) << ','
        << format_double(r.choi_vs_trace_dev) << ',' << format_double(r.closed_vs_numeric_dev)
        << '\n';
  }
}

std::vector<QSweepRow> sweep_q(double q_min, double q_max, std::size_t q_points) {
  if (!(q_min > 0.0) || !(q_max > q_min) || !std::isfinite(q_max)) {
    throw std::invalid_argument("sweep-q: require 0 < min < max");
  }
  if (q_points < 2) throw std::invalid_argument("sweep-q: need at least 2 q points");
  std::vector<QSweepRow> rows;
  rows.reserve(q_points);
  for (std::size_t k = 0; k < q_points; ++k) {
    const double qv =
        q_min + (q_max - q_min) * static_cast<double>(k) / static_cast<double>(q_points - 1);
    const DeformParam q(qv);
    const EMax best = maximize_e_over_t(q);
    const double analytic = detail::analytic_e_max(q);
    rows.push_back({qv, best.t_star, best.e_max, analytic, std::abs(best.e_max - analytic)});
  }
  return rows;
}

void write_q_csv(std::span<const QSweepRow> rows, std::ostream& out) {
  out << kQCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.q) << ',' << format_double(r.t_star) << ',' << format_double(r.e_max)
        << ',' << format_double(r.analytic_e_max) << ',' << format_double(r.deviation) << '\n';
  }
}

bool McReport::passed() const { return std::abs(z_score) <= kMcZLimit; }

McReport run_mc_ep(double q, double t, std::size_t samples, std::uint64_t seed,
                   unsigned threads) {
  const DeformParam dq(q);
  McReport rep;
  rep.q = q;
  rep.t = t;
  rep.seed = seed;
  rep.mc = ep_monte_carlo(evolve_closed(dq, t).u, samples, seed, kTwoQubits, threads);
  rep.closed_form = 4.0 / 9.0 * e_closed(dq, t);
  const double diff = rep.mc.estimate - rep.closed_form;
  if (std::abs(diff) <= kMcExactFloor) {
    // Agreement to rounding (e.g. q = 1, where every sample is ~0).
    rep.z_score = 0.0;
  } else {
    rep.z_score = rep.mc.std_error > 0.0 ? diff / rep.mc.std_error : INFINITY;
  }
  return rep;
}

void print_mc_report(const McReport& r, std::ostream& out) {
  out << "q            " << format_double(r.q) << '\n'
      << "t            " << format_double(r.t) << '\n'
      << "samples      " << r.mc.samples << '\n'
      << "seed         " << r.seed << '\n'
      << "estimate     " << format_double(r.mc.estimate) << '\n'
      << "std_error    " << format_double(r.mc.std_error) << '\n'
      << "closed_form  " << format_double(r.closed_form) << '\n'
      << "z_score      " << format_double(r.z_score) << '\n'
      << (r.passed() ? "PASS" : "FAIL") << " (|z| <= " << kMcZLimit << ")\n";
}

void write_mc_csv(const McReport& r, std::ostream& out) {
  out << kMcCsvHeader << '\n'
      << format_double(r.q) << ',' << format_double(r.t) << ',' << r.mc.samples << ',' << r.seed
      << ',' << format_double(r.mc.estimate) << ',' << format_double(r.mc.std_error) << ','
      << format_double(r.closed_form) << ',' << format_double(r.z_score) << '\n';
}

}  // namespace qdeform::cli
