#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdeform/qsu2.hpp"

using namespace qdeform;

namespace {

const ComplexMatrix kSigmaX{{0, 1}, {1, 0}};
constexpr double kRepQs[] = {0.5, 1.0, 2.0, 5.0};
constexpr unsigned kTwoLs[] = {1, 2, 3, 4};

}  // namespace

TEST(DeformParam, RejectsNonPositive) {
  EXPECT_THROW(DeformParam(0.0), std::invalid_argument);
  EXPECT_THROW(DeformParam(-2.0), std::invalid_argument);
  EXPECT_THROW(DeformParam{std::nan("")}, std::invalid_argument);
  EXPECT_THROW(DeformParam{std::numeric_limits<double>::infinity()}, std::invalid_argument);
}

TEST(DeformParam, AlphaAtLeastTwo) {
  EXPECT_EQ(DeformParam(1.0).alpha(), 2.0);
  for (double q : {0.01, 0.3, 0.999, 1.001, 2.0, 7.0, 300.0}) {
    EXPECT_GT(DeformParam(q).alpha(), 2.0);
    EXPECT_NEAR(DeformParam(q).alpha(), DeformParam(1.0 / q).alpha(), 1e-12 * q);
  }
  EXPECT_DOUBLE_EQ(DeformParam(2.0).alpha(), 2.5);
}

TEST(QNumber, UndeformedLimitIsExact) {
  for (double x : {-3.0, -0.5, 0.0, 0.25, 1.0, 7.0}) EXPECT_EQ(q_number(x, DeformParam(1.0)), x);
}

TEST(QNumber, Values) {
  EXPECT_DOUBLE_EQ(q_number(2.0, DeformParam(2.0)), 2.5);  // (4 − 1/4)/(2 − 1/2)
  for (double q : {0.3, 2.0, 9.0}) {
    EXPECT_EQ(q_number(0.0, DeformParam(q)), 0.0);
    EXPECT_EQ(q_number(1.0, DeformParam(q)), 1.0);
  }
}

TEST(QNumber, ApproachesXNearOne) {
  EXPECT_NEAR(q_number(3.0, DeformParam(1.0 + 1e-7)), 3.0, 1e-6);
}

TEST(SpinLabel, Basics) {
  const SpinLabel s(3);
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_EQ(s.l(), 1.5);
  EXPECT_EQ(s.m(0), 1.5);
  EXPECT_EQ(s.m(3), -1.5);
  EXPECT_EQ(SpinLabel(0).dim(), 1u);
}

TEST(BuildIrrep, SpinHalfIsQIndependent) {
  const auto rep = build_irrep(SpinLabel::half(), DeformParam(3.7));
  EXPECT_EQ(rep.jp, (ComplexMatrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(rep.jm, (ComplexMatrix{{0, 0}, {1, 0}}));
  EXPECT_EQ(rep.jz, (ComplexMatrix{{0.5, 0}, {0, -0.5}}));
}

TEST(BuildIrrep, SpinOneUndeformed) {
  const auto rep = build_irrep(SpinLabel(2), DeformParam(1.0));
  EXPECT_DOUBLE_EQ(rep.jp(0, 1).real(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(rep.jp(1, 2).real(), std::sqrt(2.0));
}

TEST(BuildIrrep, SpinOneDeformed) {
  const DeformParam q(2.0);
  const auto rep = build_irrep(SpinLabel(2), q);
  // <1,1|J+|1,0> = sqrt([1]_2 [2]_2)
  EXPECT_DOUBLE_EQ(rep.jp(0, 1).real(), std::sqrt(2.5));
  EXPECT_DOUBLE_EQ(rep.jp(0, 1).real(), std::sqrt(q_number(1, q) * q_number(2, q)));
}

// Commutation relations on the representation grid.
TEST(BuildIrrep, CommutationRelations) {
  for (unsigned two_l : kTwoLs) {
    for (double qv : kRepQs) {
      const DeformParam q(qv);
      const auto rep = build_irrep(SpinLabel(two_l), q);
      EXPECT_EQ(rep.jm, dagger(rep.jp));
      EXPECT_LE(frob_dist(commutator(rep.jz, rep.jp), rep.jp), 1e-12);
      EXPECT_LE(frob_dist(commutator(rep.jz, rep.jm), -rep.jm), 1e-12);
      // [2Jz]_q by functional calculus on the diagonal.
      ComplexMatrix bracket(rep.dim(), rep.dim());
      for (std::size_t i = 0; i < rep.dim(); ++i) bracket(i, i) = q_number(2.0 * rep.label.m(i), q);
      EXPECT_LE(frob_dist(commutator(rep.jp, rep.jm), bracket), 1e-12) << "2l=" << two_l << " q=" << qv;
      EXPECT_LE(frob_dist(q_number(rep.jz * cplx{2.0}, q), bracket), 1e-12);
    }
  }
}

TEST(QPowerJz, Values) {
  const auto half = build_irrep(SpinLabel::half(), DeformParam(4.0));
  const auto k = q_power_jz(half, 2.0);
  EXPECT_DOUBLE_EQ(k(0, 0).real(), 4.0);
  EXPECT_DOUBLE_EQ(k(1, 1).real(), 0.25);
  const auto k1 = q_power_jz(half, 1.0);
  EXPECT_DOUBLE_EQ(k1(0, 0).real(), 2.0);
  EXPECT_DOUBLE_EQ(k1(1, 1).real(), 0.5);
  for (unsigned two_l : kTwoLs) {
    const auto rep = build_irrep(SpinLabel(two_l), DeformParam(3.3));
    EXPECT_EQ(q_power_jz(rep, 0.0), ComplexMatrix::identity(rep.dim()));
  }
}

TEST(SingleHamiltonian, SpinHalfIsSigmaX) {
  EXPECT_LE(frob_dist(build_single_hamiltonian(build_irrep(SpinLabel::half(), DeformParam(17.0))), kSigmaX),
            1e-15);
  for (double q : {0.1, 1.0, 10.0}) {
    EXPECT_LE(frob_dist(build_single_hamiltonian(build_irrep(SpinLabel::half(), DeformParam(q))), kSigmaX),
              1e-13);
  }
}

TEST(SingleHamiltonian, UndeformedSpinOneIsTwoJx) {
  const auto rep = build_irrep(SpinLabel(2), DeformParam(1.0));
  EXPECT_LE(frob_dist(build_single_hamiltonian(rep), rep.jp + rep.jm), 1e-15);
}

TEST(SingleHamiltonian, SpinOneDeformedElement) {
  const auto h = build_single_hamiltonian(build_irrep(SpinLabel(2), DeformParam(2.0)));
  EXPECT_NEAR(h(0, 1).real(), std::sqrt(2.0) * std::sqrt(2.5), 1e-14);
}

// Element-by-element two-term action H|l,m> on the grid.
TEST(SingleHamiltonian, MatrixElementFormula) {
  for (unsigned two_l : kTwoLs) {
    for (double qv : kRepQs) {
      const DeformParam q(qv);
      const auto rep = build_irrep(SpinLabel(two_l), q);
      const auto h = build_single_hamiltonian(rep);
      const double l = rep.label.l();
      for (std::size_t i = 0; i < rep.dim(); ++i) {
        const double m = rep.label.m(i);
        if (i > 0) {
          const double up = std::pow(qv, m + 0.5) * std::sqrt(q_number(l - m, q) * q_number(l + m + 1, q));
          EXPECT_NEAR(h(i - 1, i).real(), up, 1e-12);
        }
        if (i + 1 < rep.dim()) {
          const double down = std::pow(qv, m - 0.5) * std::sqrt(q_number(l + m, q) * q_number(l - m + 1, q));
          EXPECT_NEAR(h(i + 1, i).real(), down, 1e-12);
        }
      }
      EXPECT_LE(hermiticity_defect(h), 1e-13);
    }
  }
}

TEST(SingleHamiltonian, SpectrumIsSymmetric) {
  for (unsigned two_l : kTwoLs) {
    for (double qv : kRepQs) {
      const auto ev = eigvalsh(build_single_hamiltonian(build_irrep(SpinLabel(two_l), DeformParam(qv))));
      for (std::size_t k = 0; k < ev.size(); ++k) EXPECT_NEAR(ev[k], -ev[ev.size() - 1 - k], 1e-10);
      if (two_l % 2 == 0) {
        EXPECT_NEAR(ev[ev.size() / 2], 0.0, 1e-10);
      }
    }
  }
}

TEST(SingleHamiltonian, DeformationVisibleBeyondSpinHalf) {
  for (unsigned two_l : {2u, 3u, 4u}) {
    const auto h2 = build_single_hamiltonian(build_irrep(SpinLabel(two_l), DeformParam(2.0)));
    const auto h1 = build_single_hamiltonian(build_irrep(SpinLabel(two_l), DeformParam(1.0)));
    EXPECT_GT(frob_dist(h2, h1), 1e-3);
  }
}

TEST(Antipode, Generators) {
  const auto rep = build_irrep(SpinLabel::half(), DeformParam(2.0));
  EXPECT_EQ(antipode(Generator::Jz, rep), -rep.jz);
  EXPECT_EQ(antipode(Generator::Jp, rep), rep.jp * cplx{-0.5});
  EXPECT_EQ(antipode(Generator::Jm, rep), rep.jm * cplx{-2.0});
  const auto flat = build_irrep(SpinLabel(2), DeformParam(1.0));
  EXPECT_EQ(antipode(Generator::Jm, flat), -flat.jm);
  EXPECT_EQ(antipode(Generator::Jz, flat), -flat.jz);
}

TEST(Antipode, TagParsing) {
  EXPECT_EQ(parse_generator("Jz"), Generator::Jz);
  EXPECT_EQ(parse_generator("J+"), Generator::Jp);
  EXPECT_EQ(parse_generator("Jm"), Generator::Jm);
  EXPECT_THROW(parse_generator("Jx"), std::invalid_argument);
}
