#include "qdeform/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "qdeform/hopf.hpp"

namespace qdeform {

double evolution_period(const DeformParam& q) { return 2.0 * std::numbers::pi / q.alpha(); }

double cubic_defect(const DeformParam& q) {
  const ComplexMatrix h = build_hab_compact(q);
  const double a2 = q.alpha() * q.alpha();
  return frob_dist(h * h * h, h * cplx{a2});
}

std::array<double, 4> hab_spectrum(const DeformParam& q) {
  const auto values = eigvalsh(build_hab_compact(q));
  return {values[0], values[1], values[2], values[3]};
}

EvolutionPoint evolve_closed(const DeformParam& q, double t) {
  const double alpha = q.alpha();
  const double c = std::cos(alpha * t);
  const double s = std::sin(alpha * t);
  const ComplexMatrix h = build_hab_compact(q);
  ComplexMatrix u = ComplexMatrix::identity(4);
  u += h * cplx{0.0, -s / alpha};
  u += (h * h) * cplx{(c - 1.0) / (alpha * alpha)};
  return {q, t, c, s, std::move(u)};
}

ComplexMatrix evolve_explicit_matrix(const DeformParam& q, double t) {
  const double qq = q.q();
  const double q2 = qq * qq;
  const double c = std::cos(q.alpha() * t);
  const double s = std::sin(q.alpha() * t);
  const cplx i{0.0, 1.0};
  const cplx diag_hi = 1.0 + q2 * c;
  const cplx diag_lo = q2 + c;
  const cplx a = -i * q2 * s;
  const cplx b = -i * qq * s;
  const cplx d = qq * (c - 1.0);
  const cplx e = -i * s;
  ComplexMatrix u{
      {diag_hi, a, b, d},
      {a, diag_hi, d, b},
      {b, d, diag_lo, e},
      {d, b, e, diag_lo},
  };
  return u * cplx{1.0 / (q2 + 1.0)};
}

ComplexMatrix evolve_oracle(const DeformParam& q, double t) {
  return exp_hermitian(build_hab_compact(q), cplx{0.0, -t});
}

ComplexMatrix evolve_general_l(const IrrepMatrices& rep, double t) {
  return exp_hermitian(build_hab_via_coproduct(rep), cplx{0.0, -t});
}

}  // namespace qdeform
