#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qdeform/dynamics.hpp"
#include "qdeform/hopf.hpp"

using namespace qdeform;

namespace {

constexpr double kQGrid[] = {0.5, 1.0, 1.5, 2.0, 3.0, 5.0};
const ComplexMatrix kSigmaX{{0, 1}, {1, 0}};

std::vector<double> time_grid(const DeformParam& q, std::size_t n = 200) {
  std::vector<double> ts(n);
  const double t_end = 4.0 * std::numbers::pi / q.alpha();
  for (std::size_t k = 0; k < n; ++k) ts[k] = t_end * static_cast<double>(k) / static_cast<double>(n - 1);
  return ts;
}

}  // namespace

TEST(Cubic, IdentityHoldsOnGrid) {
  EXPECT_EQ(cubic_defect(DeformParam(1.0)), 0.0);
  EXPECT_DOUBLE_EQ(DeformParam(2.0).alpha(), 2.5);
  EXPECT_DOUBLE_EQ(DeformParam(0.5).alpha(), 2.5);
  for (double q : kQGrid) EXPECT_LE(cubic_defect(DeformParam(q)), 1e-10) << "q=" << q;
}

TEST(Spectrum, ZeroZeroPlusMinusAlpha) {
  const std::array<double, 4> q1{-2.0, 0.0, 0.0, 2.0};
  const std::array<double, 4> q2{-2.5, 0.0, 0.0, 2.5};
  const std::array<double, 4> q3{-10.0 / 3.0, 0.0, 0.0, 10.0 / 3.0};
  const auto s1 = hab_spectrum(DeformParam(1.0));
  const auto s2 = hab_spectrum(DeformParam(2.0));
  const auto s3 = hab_spectrum(DeformParam(3.0));
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(s1[k], q1[k], 1e-10);
    EXPECT_NEAR(s2[k], q2[k], 1e-10);
    EXPECT_NEAR(s3[k], q3[k], 1e-10);
  }
}

TEST(Spectrum, InverseQSameSpectrum) {
  for (double q : kQGrid) {
    const auto a = hab_spectrum(DeformParam(q));
    const auto b = hab_spectrum(DeformParam(1.0 / q));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a[k], b[k], 1e-10);
  }
}

TEST(EvolveClosed, IdentityAtZero) {
  for (double q : kQGrid) {
    const auto p = evolve_closed(DeformParam(q), 0.0);
    EXPECT_EQ(p.u, ComplexMatrix::identity(4));
    EXPECT_EQ(p.c, 1.0);
    EXPECT_EQ(p.s, 0.0);
  }
}

TEST(EvolveClosed, FactorizesAtQOne) {
  for (double t : {0.2, 1.0, 2.9}) {
    const auto local = exp_hermitian(kSigmaX, cplx{0.0, -t});
    EXPECT_LE(frob_dist(evolve_closed(DeformParam(1.0), t).u, kron(local, local)), 1e-13);
  }
}

// c = −1, s = 0: U = 1 − (2/α²) H², U(0,0) = (1 − q²)/(q² + 1).
TEST(EvolveClosed, HalfPeriodAtQTwo) {
  const DeformParam q(2.0);
  const auto p = evolve_closed(q, std::numbers::pi / q.alpha());
  EXPECT_NEAR(p.c, -1.0, 1e-15);
  EXPECT_NEAR(p.u(0, 0).real(), -0.6, 1e-14);
  EXPECT_NEAR(p.u(2, 2).real(), 0.6, 1e-14);  // (q² + c)/(q²+1) = 3/5
  EXPECT_NEAR(p.u(0, 3).real(), -0.8, 1e-14);  // q(c−1)/(q²+1)
  EXPECT_LE(frob_dist(p.u, evolve_oracle(q, std::numbers::pi / q.alpha())), 1e-10);
}

TEST(EvolveClosed, InvariantsOfEvolutionPoint) {
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    for (double t : time_grid(q, 37)) {
      const auto p = evolve_closed(q, t);
      EXPECT_NEAR(p.c * p.c + p.s * p.s, 1.0, 1e-14);
      EXPECT_LE(unitarity_defect(p.u), 1e-10);
    }
  }
}

// Polynomial, explicit matrix and eigendecomposition agree on the full grid.
TEST(EvolveClosed, MatchesOracleAndExplicitMatrix) {
  double worst_oracle = 0.0, worst_table = 0.0;
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    for (double t : time_grid(q)) {
      const auto u = evolve_closed(q, t).u;
      worst_oracle = std::max(worst_oracle, frob_dist(u, evolve_oracle(q, t)));
      worst_table = std::max(worst_table, frob_dist(u, evolve_explicit_matrix(q, t)));
    }
  }
  EXPECT_LE(worst_oracle, 1e-10);
  EXPECT_LE(worst_table, 1e-10);
}

TEST(EvolveOracle, SpotValues) {
  EXPECT_LE(frob_dist(evolve_oracle(DeformParam(1.0), std::numbers::pi / 2),
                      evolve_closed(DeformParam(1.0), std::numbers::pi / 2).u),
            1e-10);
  EXPECT_LE(frob_dist(evolve_oracle(DeformParam(5.0), 1.3), evolve_closed(DeformParam(5.0), 1.3).u), 1e-10);
  EXPECT_LE(frob_dist(evolve_oracle(DeformParam(2.7), 0.0), ComplexMatrix::identity(4)), 1e-14);
}

TEST(EvolveClosed, Periodicity) {
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    for (double t : time_grid(q, 23)) {
      EXPECT_LE(frob_dist(evolve_closed(q, t + evolution_period(q)).u, evolve_closed(q, t).u), 1e-10);
    }
  }
}

TEST(EvolveClosed, GroupProperty) {
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    for (double t1 : {0.1, 0.7, 2.2}) {
      for (double t2 : {-0.4, 0.3, 1.9}) {
        EXPECT_LE(frob_dist(evolve_closed(q, t1).u * evolve_closed(q, t2).u, evolve_closed(q, t1 + t2).u),
                  1e-10);
      }
    }
  }
}

TEST(EvolveGeneralL, SpinHalfReducesToOracle) {
  const auto p = basis_exchange_01_10();
  for (double qv : kQGrid) {
    const DeformParam q(qv);
    const auto ug = evolve_general_l(build_irrep(SpinLabel::half(), q), 1.1);
    EXPECT_LE(frob_dist(p * ug * p, evolve_oracle(q, 1.1)), 1e-10);
  }
}

TEST(EvolveGeneralL, SpinOneUndeformedFactorizes) {
  const auto rep = build_irrep(SpinLabel(2), DeformParam(1.0));
  const auto local = exp_hermitian(build_single_hamiltonian(rep), cplx{0.0, -0.9});
  const auto u = evolve_general_l(rep, 0.9);
  EXPECT_LE(frob_dist(u, kron(local, local)), 1e-12);
  EXPECT_LE(unitarity_defect(u), 1e-10);
}

TEST(EvolveGeneralL, NoCubicClosureAtSpinOne) {
  const DeformParam q(2.0);
  const auto h = build_hab_via_coproduct(build_irrep(SpinLabel(2), q));
  EXPECT_GT(frob_dist(h * h * h, h * cplx{q.alpha() * q.alpha()}), 0.1);
  EXPECT_LE(unitarity_defect(evolve_general_l(build_irrep(SpinLabel(2), q), 0.4)), 1e-10);
}
