#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "analytic_emax.hpp"
#include "qdeform/cli.hpp"
#include "qdeform/dynamics.hpp"
#include "qdeform/hopf.hpp"

namespace qdeform::cli {

namespace {

constexpr std::array<double, 6> kQGrid{0.5, 1.0, 1.5, 2.0, 3.0, 5.0};
constexpr std::array<double, 4> kRepQs{0.5, 1.0, 2.0, 5.0};
constexpr std::array<unsigned, 4> kTwoLs{1, 2, 3, 4};
constexpr std::size_t kTimePoints = 200;
constexpr std::uint64_t kVerifySeed = 20240611;

struct GridPoint {
  DeformParam q;
  double t;
};

// 200 points over [0, 4π/α] for each q.
std::vector<GridPoint> qt_grid() {
  std::vector<GridPoint> grid;
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    const double t_end = 2.0 * evolution_period(q);
    for (std::size_t k = 0; k < kTimePoints; ++k) {
      grid.push_back({q, t_end * static_cast<double>(k) / static_cast<double>(kTimePoints - 1)});
    }
  }
  return grid;
}

class Suite {
 public:
  explicit Suite(double tolerance) : scale_(tolerance / kDefaultTolerance) {}

  /// value <= nominal · scale.
  void bound(std::string name, std::string metric, double value, double nominal) {
    add(std::move(name), std::move(metric), value, nominal * scale_);
  }
  /// value <= threshold, independent of the tolerance flag.
  void fixed(std::string name, std::string metric, double value, double threshold) {
    add(std::move(name), std::move(metric), value, threshold);
  }
  /// Predicate check; value is reported for information.
  void holds(std::string name, std::string metric, double value, bool ok) {
    checks_.push_back({std::move(name), std::move(metric), value, 0.0, ok});
    checks_.back().threshold = NAN;
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  void add(std::string name, std::string metric, double value, double threshold) {
    checks_.push_back({std::move(name), std::move(metric), value, threshold,
                       std::isfinite(value) && value <= threshold});
  }

  double scale_;
  std::vector<CheckResult> checks_;
};

const ComplexMatrix& cnot() {
  static const ComplexMatrix m{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  return m;
}

ComplexMatrix two_qubit_swap() {
  const std::array<std::size_t, 2> dims{2, 2};
  return swap_operator(dims, 0, 1);
}

void check_matcore(Suite& s) {
  CounterRng rng(kVerifySeed, 0);
  // Partial trace composition on a random 2x3x2 state.
  const std::array<std::size_t, 3> dims{2, 3, 2};
  const ComplexMatrix g = haar_unitary(rng, 12);
  ComplexMatrix rho = g * ComplexMatrix::diagonal(std::vector<double>{
                              0.3, 0.2, 0.1, 0.1, 0.05, 0.05, 0.05, 0.05, 0.04, 0.03, 0.02, 0.01}) *
                      dagger(g);
  double dev = 0.0;
  {
    const std::array<std::size_t, 1> keep0{0};
    const std::array<std::size_t, 2> keep01{0, 1}, keep02{0, 2};
    const auto joint = partial_trace(rho, dims, keep0);
    const std::array<std::size_t, 2> d01{2, 3}, d02{2, 2};
    const auto via1 = partial_trace(partial_trace(rho, dims, keep01), d01, keep0);
    const auto via2 = partial_trace(partial_trace(rho, dims, keep02), d02, keep0);
    dev = std::max(frob_dist(joint, via1), frob_dist(joint, via2));
  }
  s.bound("partial trace composition", "max deviation", dev, 1e-12);

  const std::array<std::size_t, 4> four{2, 2, 2, 2};
  double inv = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto p = swap_operator(four, i, j);
      inv = std::max(inv, frob_dist(p * p, ComplexMatrix::identity(16)));
    }
  }
  s.fixed("swap operator involution", "max |P^2 - I|", inv, 0.0);

  double unit = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = haar_unitary(rng, 6);
    const ComplexMatrix h = (a + dagger(a)) * cplx{1.7};
    unit = std::max(unit, unitarity_defect(exp_hermitian(h, cplx{0.0, -2.3})));
  }
  for (double qv : kQGrid) {
    unit = std::max(unit, unitarity_defect(evolve_oracle(DeformParam(qv), 1.234)));
  }
  s.bound("exp_hermitian unitarity", "max |U^dag U - I|", unit, 1e-10);
}

void check_qsu2(Suite& s) {
  double comm = 0.0, elems = 0.0, herm = 0.0, sym = 0.0;
  for (unsigned two_l : kTwoLs) {
    for (double qv : kRepQs) {
      const DeformParam q(qv);
      const auto rep = build_irrep(SpinLabel(two_l), q);
      comm = std::max(comm, frob_dist(commutator(rep.jz, rep.jp), rep.jp));
      comm = std::max(comm, frob_dist(commutator(rep.jz, rep.jm), -rep.jm));
      comm = std::max(comm, frob_dist(commutator(rep.jp, rep.jm),
                                      q_number(rep.jz * cplx{2.0}, q)));

      const ComplexMatrix h = build_single_hamiltonian(rep);
      ComplexMatrix expected(rep.dim(), rep.dim());
      const double l = rep.label.l();
      for (std::size_t i = 0; i < rep.dim(); ++i) {
        const double m = rep.label.m(i);
        if (i > 0) {
          expected(i - 1, i) = std::pow(qv, m + 0.5) *
                               std::sqrt(q_number(l - m, q) * q_number(l + m + 1.0, q));
        }
        if (i + 1 < rep.dim()) {
          expected(i + 1, i) = std::pow(qv, m - 0.5) *
                               std::sqrt(q_number(l + m, q) * q_number(l - m + 1.0, q));
        }
      }
      elems = std::max(elems, frob_dist(h, expected));
      herm = std::max(herm, hermiticity_defect(h));
      const auto ev = eigvalsh(h);
      for (std::size_t k = 0; k < ev.size(); ++k) {
        sym = std::max(sym, std::abs(ev[k] + ev[ev.size() - 1 - k]));
      }
    }
  }
  s.bound("commutation relations", "max deviation", comm, 1e-12);
  s.bound("H(q) matrix elements", "max deviation", elems, 1e-12);
  s.bound("H(q) hermiticity", "max defect", herm, 1e-13);
  s.bound("H(q) spectrum symmetry", "max |lambda + lambda'|", sym, 1e-10);

  const ComplexMatrix sigma_x{{0, 1}, {1, 0}};
  double indep = 0.0;
  for (double qv : {0.1, 0.5, 1.0, 2.0, 10.0, 17.0}) {
    const auto rep = build_irrep(SpinLabel::half(), DeformParam(qv));
    indep = std::max(indep, frob_dist(build_single_hamiltonian(rep), sigma_x));
  }
  s.bound("spin-1/2 q-independence (H = sigma_x)", "max deviation", indep, 1e-13);

  double visible = INFINITY;
  for (unsigned two_l : {2u, 3u, 4u}) {
    const auto h2 = build_single_hamiltonian(build_irrep(SpinLabel(two_l), DeformParam(2.0)));
    const auto h1 = build_single_hamiltonian(build_irrep(SpinLabel(two_l), DeformParam(1.0)));
    visible = std::min(visible, frob_dist(h2, h1));
  }
  s.holds("deformation visible for l >= 1", "min |H(2) - H(1)|", visible, visible > 1e-3);
}

void check_hopf(Suite& s) {
  double hom = 0.0, funcalc = 0.0, equiv = 0.0, herm = 0.0, grouplike = 0.0;
  for (unsigned two_l : {1u, 2u}) {
    for (double qv : kRepQs) {
      const DeformParam q(qv);
      const auto rep = build_irrep(SpinLabel(two_l), q);
      const auto dp = coproduct_ladder(rep, Ladder::Raise);
      const auto dm = coproduct_ladder(rep, Ladder::Lower);
      const auto dz = coproduct_jz(rep);
      hom = std::max(hom, frob_dist(commutator(dp, dm), q_number(dz * cplx{2.0}, q)));
      hom = std::max(hom, frob_dist(commutator(dz, dp), dp));
      hom = std::max(hom, frob_dist(commutator(dz, dm), -dm));

      const auto k = q_power_jz(rep, 0.5);
      grouplike = std::max(grouplike, frob_dist(coproduct_q_half_jz(rep), kron(k, k)));
      funcalc = std::max(funcalc, frob_dist(coproduct_q_half_jz(rep),
                                            exp_hermitian(dz, cplx{0.5 * std::log(qv)})));
      herm = std::max(herm, hermiticity_defect(build_hab_via_coproduct(rep)));
    }
  }
  const auto p = basis_exchange_01_10();
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    const auto via = build_hab_via_coproduct(build_irrep(SpinLabel::half(), q));
    equiv = std::max(equiv, frob_dist(build_hab_compact(q), p * via * p));
  }
  s.bound("coproduct homomorphism", "max deviation", hom, 1e-10);
  s.fixed("group-like coproduct of q^(Jz/2)", "max |D(K) - K(x)K|", grouplike, 0.0);
  s.bound("q^(Jz/2) coproduct vs functional calculus", "max deviation", funcalc, 1e-12);
  s.bound("coproduct H_AB hermiticity", "max defect", herm, 1e-13);
  s.bound("H_AB compact vs permuted coproduct form", "max deviation", equiv, 1e-13);

  // Zero iff q = 1 and strictly increasing in |log q|.
  std::vector<std::pair<double, double>> by_log;
  bool zero_iff = true;
  double at_one = NAN;
  for (double qv : {0.2, 0.5, 0.8, 1.0, 1.25, 2.0, 5.0}) {
    const double d = cocommutativity_defect(build_irrep(SpinLabel::half(), DeformParam(qv)));
    if (qv == 1.0) {
      at_one = d;
      zero_iff = zero_iff && d == 0.0;
    } else {
      zero_iff = zero_iff && d > 1e-6;
    }
    by_log.emplace_back(std::abs(std::log(qv)), d);
  }
  std::sort(by_log.begin(), by_log.end());
  bool monotone = true;
  for (std::size_t k = 1; k < by_log.size(); ++k) {
    if (by_log[k].first > by_log[k - 1].first + 1e-12 && !(by_log[k].second > by_log[k - 1].second)) {
      monotone = false;
    }
  }
  s.holds("cocommutativity defect zero iff q = 1", "defect at q=1", at_one, zero_iff && monotone);
}

void check_dynamics(Suite& s, const std::vector<GridPoint>& grid) {
  double cubic = 0.0, spec = 0.0, inv_spec = 0.0;
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    cubic = std::max(cubic, cubic_defect(q));
    const auto ev = hab_spectrum(q);
    const std::array<double, 4> want{-q.alpha(), 0.0, 0.0, q.alpha()};
    const auto ev_inv = hab_spectrum(q.inverse());
    for (std::size_t k = 0; k < 4; ++k) {
      spec = std::max(spec, std::abs(ev[k] - want[k]));
      inv_spec = std::max(inv_spec, std::abs(ev[k] - ev_inv[k]));
    }
  }
  s.bound("cubic identity", "max defect", cubic, 1e-10);
  s.bound("H_AB spectrum {-a, 0, 0, a}", "max deviation", spec, 1e-10);
  s.bound("q <-> 1/q spectra", "max deviation", inv_spec, 1e-10);

  double oracle = 0.0, table = 0.0, unit = 0.0, period = 0.0, group = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto& [q, t] = grid[k];
    const auto u = evolve_closed(q, t).u;
    oracle = std::max(oracle, frob_dist(u, evolve_oracle(q, t)));
    table = std::max(table, frob_dist(u, evolve_explicit_matrix(q, t)));
    unit = std::max(unit, unitarity_defect(u));
    if (k % 10 == 0) {
      period = std::max(period, frob_dist(evolve_closed(q, t + evolution_period(q)).u, u));
      const double t2 = 0.37 * t + 0.11;
      group = std::max(group, frob_dist(u * evolve_closed(q, t2).u, evolve_closed(q, t + t2).u));
    }
  }
  s.bound("closed-form U(t) vs exp_hermitian", "max deviation", oracle, 1e-10);
  s.bound("closed-form U(t) vs explicit matrix", "max deviation", table, 1e-10);
  s.bound("U(t) unitarity", "max defect", unit, 1e-10);
  s.bound("U(t) periodicity 2pi/alpha", "max deviation", period, 1e-10);
  s.bound("U(t) group property", "max deviation", group, 1e-10);

  double general = 0.0;
  const auto p = basis_exchange_01_10();
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    const auto ug = evolve_general_l(build_irrep(SpinLabel::half(), q), 0.77);
    general = std::max(general, frob_dist(p * ug * p, evolve_oracle(q, 0.77)));
  }
  s.bound("general-l evolution at l=1/2", "max deviation", general, 1e-10);

  const DeformParam q2(2.0);
  const auto h1 = build_hab_via_coproduct(build_irrep(SpinLabel(2), q2));
  const double no_closure = frob_dist(h1 * h1 * h1, h1 * cplx{q2.alpha() * q2.alpha()});
  s.holds("no cubic closure at l=1", "|H^3 - a^2 H|", no_closure, no_closure > 0.1);
}

void check_entops(Suite& s, const std::vector<GridPoint>& grid) {
  CounterRng rng(kVerifySeed, 1);
  const auto swap = two_qubit_swap();

  double routes = 0.0, mixed_vs_us = 0.0, local = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto u = haar_unitary(rng, 4);
    const double e = op_entanglement_choi(u);
    routes = std::max(routes, std::abs(e - op_entanglement_trace(u)));
    mixed_vs_us = std::max(mixed_vs_us, std::abs(mixed_invariant(u) - op_entanglement_choi(u * swap)));
    if (k < 20) {
      const auto left = kron(haar_unitary(rng, 2), haar_unitary(rng, 2));
      const auto right = kron(haar_unitary(rng, 2), haar_unitary(rng, 2));
      local = std::max(local, std::abs(op_entanglement_choi(left * u * right) - e));
    }
  }

  double closed = 0.0, trivial = 0.0, mixed_tr = 0.0, mixed_e = 0.0, slaved = 0.0, osc = 0.0,
         inv = 0.0, lo = INFINITY, hi = -INFINITY;
  for (const auto& [q, t] : grid) {
    const auto u = evolve_closed(q, t).u;
    const double e_choi = op_entanglement_choi(u);
    const double ec = e_closed(q, t);
    routes = std::max(routes, std::abs(e_choi - op_entanglement_trace(u)));
    closed = std::max(closed, std::abs(ec - e_choi));
    if (q.is_undeformed() || t == 0.0) trivial = std::max(trivial, std::abs(ec));
    mixed_tr = std::max(mixed_tr, std::abs(mixed_trace(u) - 4.0));
    mixed_e = std::max(mixed_e, std::abs(mixed_invariant(u) - 0.75));
    slaved = std::max(slaved, std::abs(ep_formula(u) - 4.0 / 9.0 * ec));
    osc = std::max(osc, std::abs(e_closed(q, t + evolution_period(q)) - ec));
    inv = std::max(inv, std::abs(e_closed(q.inverse(), t) - ec));
    lo = std::min(lo, ec);
    hi = std::max(hi, ec);
  }
  s.bound("E route equivalence (Choi vs trace)", "max deviation", routes, 1e-10);
  s.bound("closed-form E vs Choi", "max deviation", closed, 1e-10);
  s.bound("E = 0 at q = 1 and at t = 0", "max |E|", trivial, 1e-12);
  s.bound("local-unitary invariance of E", "max deviation", local, 1e-10);
  s.bound("mixed trace = 4", "max |Tr - 4|", mixed_tr, 1e-9);
  s.bound("mixed invariant = 3/4", "max deviation", mixed_e, 1e-10);
  s.bound("mixed invariant = E(U S)", "max deviation", mixed_vs_us, 1e-10);
  s.bound("slaved entangling power ep = 4/9 E", "max deviation", slaved, 1e-10);
  s.bound("E(U(t)) periodicity", "max deviation", osc, 1e-12);
  s.bound("E q <-> 1/q symmetry", "max deviation", inv, 1e-12);
  s.holds("E range [0, 1/2]", "max E", hi, lo >= 0.0 && hi <= 0.5 + 1e-12);

  double gates = 0.0;
  gates = std::max(gates, std::abs(op_entanglement_choi(swap) - 0.75));
  gates = std::max(gates, std::abs(op_entanglement_trace(swap) - 0.75));
  gates = std::max(gates, std::abs(op_entanglement_choi(cnot()) - 0.5));
  gates = std::max(gates, std::abs(op_entanglement_trace(cnot()) - 0.5));
  gates = std::max(gates, std::abs(ep_formula(cnot()) - 2.0 / 9.0));
  s.bound("known gates (SWAP, CNOT)", "max deviation", gates, 1e-12);

  double emax_dev = 0.0, saturation = 0.0;
  for (std::size_t k = 0; k < 50; ++k) {
    const DeformParam q(1.0 + 4.0 * static_cast<double>(k) / 49.0);
    const auto best = maximize_e_over_t(q);
    emax_dev = std::max(emax_dev, std::abs(best.e_max - detail::analytic_e_max(q)));
    if (q.q() >= 2.4143) saturation = std::max(saturation, std::abs(best.e_max - 0.5));
  }
  const double at2 = std::abs(maximize_e_over_t(DeformParam(2.0)).e_max - 0.4608);
  s.bound("E_max numeric vs analytic", "max deviation", emax_dev, 1e-8);
  s.bound("E_max saturation for q >= 1+sqrt(2)", "max |E_max - 1/2|", saturation, 1e-9);
  s.fixed("E_max(q=2) = 0.4608", "deviation", at2, 1e-5);

  const DeformParam q(2.0);
  const double t = std::numbers::pi / q.alpha();
  const auto mc = ep_monte_carlo(evolve_closed(q, t).u, 100000, 42);
  const double z = std::abs(mc.estimate - 4.0 / 9.0 * e_closed(q, t)) / mc.std_error;
  s.fixed("Monte Carlo ep at q=2, at=pi (n=1e5)", "|z|", z, 3.0);
  s.fixed("Monte Carlo standard error", "std_error", mc.std_error, 1.5e-3);
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerifyReport run_verify(double tolerance) {
  const auto start = std::chrono::steady_clock::now();
  Suite s(tolerance);
  const auto grid = qt_grid();
  check_matcore(s);
  check_qsu2(s);
  check_hopf(s);
  check_dynamics(s, grid);
  check_entops(s, grid);
  VerifyReport report{s.take(), 0.0};
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.metric << ' '
        << short_num(c.value);
    if (!std::isnan(c.threshold)) out << " <= " << short_num(c.threshold);
    out << '\n';
    if (!c.passed) ++failed;
  }
  out << report.checks.size() - failed << '/' << report.checks.size() << " checks passed in "
      << short_num(report.seconds) << " s\n";
}

}  // namespace qdeform::cli
