#pragma once

// Piecewise maximum of E(U(t)) over t, from minimizing Δ(q, c) over c ∈ [-1, 1].
// Private to the CLI, which prints it next to the numerical maximum.

#include <cmath>

#include "qdeform/qsu2.hpp"

namespace qdeform::cli::detail {

inline double analytic_e_max(const DeformParam& q) {
  const double q2 = q.q() * q.q();
  const double g = (q2 - 1.0) * (q2 - 1.0);
  // The vertex c* = −4q²/(q²−1)² lies in [−1, 1] iff (q²−1)² ≥ 4q², where Δ(c*) = 0.
  if (g >= 4.0 * q2) return 0.5;
  const double p = (q2 + 1.0) * (q2 + 1.0);
  const double root = q2 * q2 - 6.0 * q2 + 1.0;
  return 0.5 - root * root / (2.0 * p * p);
}

}  // namespace qdeform::cli::detail
