#include "qdeform/hopf.hpp"

#include <array>
#include <vector>

namespace qdeform {

ComplexMatrix coproduct_ladder(const IrrepMatrices& rep, Ladder which) {
  const ComplexMatrix& j = which == Ladder::Raise ? rep.jp : rep.jm;
  return kron(j, q_power_jz(rep, 1.0)) + kron(q_power_jz(rep, -1.0), j);
}

ComplexMatrix coproduct_jz(const IrrepMatrices& rep) {
  const auto id = ComplexMatrix::identity(rep.dim());
  return kron(rep.jz, id) + kron(id, rep.jz);
}

ComplexMatrix coproduct_q_half_jz(const IrrepMatrices& rep) {
  const ComplexMatrix k = q_power_jz(rep, 0.5);
  return kron(k, k);
}

ComplexMatrix flip(const ComplexMatrix& two_site, std::size_t site_dim) {
  const std::array<std::size_t, 2> dims{site_dim, site_dim};
  const ComplexMatrix swap = swap_operator(dims, 0, 1);
  return swap * two_site * swap;
}

ComplexMatrix build_hab_via_coproduct(const IrrepMatrices& rep) {
  const ComplexMatrix k = coproduct_q_half_jz(rep);
  const ComplexMatrix hop = coproduct_ladder(rep, Ladder::Raise) + coproduct_ladder(rep, Ladder::Lower);
  return k * hop * k;
}

ComplexMatrix build_hab_compact(const DeformParam& q) {
  const IrrepMatrices rep = build_irrep(SpinLabel::half(), q);
  const ComplexMatrix sigma_x = rep.jp + rep.jm;
  return kron(sigma_x, ComplexMatrix::identity(2)) + kron(q_power_jz(rep, 2.0), sigma_x);
}

ComplexMatrix basis_exchange_01_10() {
  return ComplexMatrix{
      {1.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 1.0, 0.0},
      {0.0, 1.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 1.0},
  };
}

double cocommutativity_defect(const IrrepMatrices& rep) {
  const ComplexMatrix delta = coproduct_ladder(rep, Ladder::Raise);
  return frob_dist(delta, flip(delta, rep.dim()));
}

}  // namespace qdeform
