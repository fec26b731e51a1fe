#pragma once

// Coproduct maps of U_q(su(2)) and the two-site operators built from them.
//
//   Δ(J±)       = J± ⊗ q^{Jz} + q^{-Jz} ⊗ J±
//   Δ(Jz)       = Jz ⊗ 1 + 1 ⊗ Jz
//   Δ(q^{Jz/2}) = q^{Jz/2} ⊗ q^{Jz/2}
//
// Composite operators act on rep ⊗ rep with site A as the left factor.

#include "qdeform/matcore.hpp"
#include "qdeform/qsu2.hpp"

namespace qdeform {

enum class Ladder { Raise, Lower };

ComplexMatrix coproduct_ladder(const IrrepMatrices& rep, Ladder which);
ComplexMatrix coproduct_jz(const IrrepMatrices& rep);
ComplexMatrix coproduct_q_half_jz(const IrrepMatrices& rep);

/// τ∘X: conjugation of a two-site operator by the factor swap.
ComplexMatrix flip(const ComplexMatrix& two_site, std::size_t site_dim);

/// Δ(H) = Δ(q^{Jz/2}) Δ(J+ + J-) Δ(q^{Jz/2}) on rep ⊗ rep.
ComplexMatrix build_hab_via_coproduct(const IrrepMatrices& rep);

/// σx ⊗ 1 + q^{2Jz} ⊗ σx for two qubits.
ComplexMatrix build_hab_compact(const DeformParam& q);

/// Two-qubit basis permutation exchanging |01> and |10>, written out entry by
/// entry rather than derived from swap_operator.
ComplexMatrix basis_exchange_01_10();

/// ‖Δ(J+) − τ∘Δ(J+)‖_F; vanishes only in the undeformed limit.
double cocommutativity_defect(const IrrepMatrices& rep);

}  // namespace qdeform
