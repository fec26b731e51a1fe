#pragma once

// Two-qubit time evolution U(t) = exp(-i t H_AB(q)).
//
// H_AB satisfies H³ = α² H with α = q + 1/q and spectrum {-α, 0, 0, α}, so the
// exponential collapses to the quadratic polynomial
//   U(t) = 1 − i (sin αt / α) H + ((cos αt − 1) / α²) H².

#include <array>

#include "qdeform/matcore.hpp"
#include "qdeform/qsu2.hpp"

namespace qdeform {

struct EvolutionPoint {
  DeformParam q;
  double t;
  double c;  // cos(αt)
  double s;  // sin(αt)
  ComplexMatrix u;
};

/// Revival period 2π/α.
double evolution_period(const DeformParam& q);

/// ‖H³ − α² H‖_F for the compact two-qubit Hamiltonian.
double cubic_defect(const DeformParam& q);

/// Ascending eigenvalues of H_AB(q).
std::array<double, 4> hab_spectrum(const DeformParam& q);

/// Closed form via the quadratic matrix polynomial.
EvolutionPoint evolve_closed(const DeformParam& q, double t);

/// Entry-by-entry closed-form matrix (prefactor 1/(q²+1)); a cross-check table
/// for evolve_closed.
ComplexMatrix evolve_explicit_matrix(const DeformParam& q, double t);

/// exp_hermitian(H_AB(q), −i t).
ComplexMatrix evolve_oracle(const DeformParam& q, double t);

/// Numerical evolution under Δ(H) on rep ⊗ rep (any spin).
ComplexMatrix evolve_general_l(const IrrepMatrices& rep, double t);

}  // namespace qdeform
