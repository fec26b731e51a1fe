#pragma once

// Test-only brute-force oracles. These work on raw index arithmetic and share
// no code path with the library routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qdeform/matcore.hpp"

namespace qdeform::oracle {

/// Operator-Schmidt route: reshape U[(a,b),(a',b')] into M[(a,a'),(b,b')]/d and
/// return 1 − Tr((M M†)²).
inline double linear_entropy_reshape(const ComplexMatrix& u, std::size_t da, std::size_t db) {
  const std::size_t d = da * db;
  const std::size_t ra = da * da, rb = db * db;
  std::vector<cplx> m(ra * rb);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a2 = 0; a2 < da; ++a2)
        for (std::size_t b2 = 0; b2 < db; ++b2)
          m[(a * da + a2) * rb + (b * db + b2)] =
              u(a * db + b, a2 * db + b2) / std::sqrt(static_cast<double>(d));
  std::vector<cplx> s(ra * ra);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) {
      cplx acc{};
      for (std::size_t k = 0; k < rb; ++k) acc += m[i * rb + k] * std::conj(m[j * rb + k]);
      s[i * ra + j] = acc;
    }
  double tr = 0.0;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) tr += (s[i * ra + j] * s[j * ra + i]).real();
  return 1.0 - tr;
}

/// Tr(U⊗U · P · U†⊗U† · T13) on the doubled two-qubit space by explicit index
/// sums, where P exchanges doubled-space factors (i, j), 0-based.
inline cplx permuted_trace_sum(const ComplexMatrix& u, int pi, int pj) {
  auto uu = [&](int r, int c) {  // (U⊗U)(r, c)
    return u(r >> 2, c >> 2) * u(r & 3, c & 3);
  };
  auto apply_perm = [](int flat, int i, int j) {
    int d[4];
    for (int k = 3, f = flat; k >= 0; --k, f >>= 1) d[k] = f & 1;
    std::swap(d[i], d[j]);
    return ((d[0] * 2 + d[1]) * 2 + d[2]) * 2 + d[3];
  };
  // Tr(A P B T) = Σ_x A(x, P y) B(y, T x) with P|y> = |p(y)>, so (A P)(x, y) = A(x, p(y)).
  cplx acc{};
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      const int py = apply_perm(y, pi, pj);
      const int tx = apply_perm(x, 0, 2);
      acc += uu(x, py) * std::conj(uu(tx, y));
    }
  }
  return acc;
}

/// max over t of E_closed, by minimizing Δ(q, c) on a dense c grid in [−1, 1]
/// plus the exact vertex when it is interior.
inline double e_max_by_c_scan(double q) {
  const double q2 = q * q;
  const double g = (q2 - 1.0) * (q2 - 1.0);
  auto delta = [&](double c) { return g * g * c * c + 8.0 * q2 * g * c + 16.0 * q2 * q2; };
  double best = delta(-1.0);
  for (int k = 0; k <= 200000; ++k) best = std::min(best, delta(-1.0 + 2.0 * k / 200000.0));
  if (g > 0.0) {
    const double vertex = -4.0 * q2 / g;
    if (vertex >= -1.0 && vertex <= 1.0) best = std::min(best, std::max(0.0, delta(vertex)));
  }
  const double p = (q2 + 1.0) * (q2 + 1.0);
  return 0.5 - best / (2.0 * p * p);
}

}  // namespace qdeform::oracle
