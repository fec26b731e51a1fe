#pragma once

// Operator entanglement and entangling power of bipartite unitaries.
//
// Two independent routes to the linear-entropy operator entanglement E(U):
//
//   * Choi route: |U> = (U ⊗ 1)|Φ+>, reduce |U><U| onto AA' and take
//     1 − Tr σ².
//   * Trace route: E(U) = 1 − Tr(U⊗U T13 U†⊗U† T13) / (dA² dB²), with T13 the
//     exchange of A and A' in the doubled space (A, B, A', B').
//
// Both are evaluated on dense matrices with no shared code beyond matcore.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdeform/matcore.hpp"
#include "qdeform/philox.hpp"
#include "qdeform/qsu2.hpp"

namespace qdeform {

struct BipartiteDims {
  std::size_t dA = 2;
  std::size_t dB = 2;

  std::size_t total() const noexcept { return dA * dB; }
  /// Factor dimensions of the doubled space (A, B, A', B').
  std::vector<std::size_t> doubled() const { return {dA, dB, dA, dB}; }
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

inline constexpr BipartiteDims kTwoQubits{2, 2};

/// Unitarity threshold for inputs to the entanglement measures.
inline constexpr double kUnitarityGate = 1e-8;

/// Normalized Choi vector. Amplitudes are stored in (A, B, A', B') order;
/// regrouped() returns the same amplitudes permuted into (A, A', B, B').
struct ChoiVector {
  BipartiteDims dims;
  std::vector<cplx> amplitudes;

  cplx at(std::size_t a, std::size_t b, std::size_t a2, std::size_t b2) const {
    return amplitudes[((a * dims.dB + b) * dims.dA + a2) * dims.dB + b2];
  }
  std::vector<cplx> regrouped() const;
};

ChoiVector choi_vector(const ComplexMatrix& u, BipartiteDims dims = kTwoQubits);

double op_entanglement_choi(const ComplexMatrix& u, BipartiteDims dims = kTwoQubits);
double op_entanglement_trace(const ComplexMatrix& u, BipartiteDims dims = kTwoQubits);

/// Tr(U⊗U T13 U†⊗U† T13).
double wz_trace(const ComplexMatrix& u, BipartiteDims dims = kTwoQubits);
/// Tr(U⊗U T24 U†⊗U† T13).
double mixed_trace(const ComplexMatrix& u, BipartiteDims dims = kTwoQubits);

/// Ẽ(U) = 1 − mixed_trace / (dA² dB²), equal to E(U S). Requires dA == dB.
double mixed_invariant(const ComplexMatrix& u, BipartiteDims dims = kTwoQubits);

/// E(S) = 1 − 1/(dA dB) for the physical swap.
double swap_entanglement(BipartiteDims dims = kTwoQubits);

/// Haar-averaged entangling power from the invariants:
/// dA dB / ((dA+1)(dB+1)) · [E(U) + Ẽ(U) − E(S)].
double ep_formula(const ComplexMatrix& u, BipartiteDims dims = kTwoQubits);

/// Δ(q, c) = (q²−1)⁴ c² + 8 q² (q²−1)² c + 16 q⁴.
double delta_qc(const DeformParam& q, double c);

/// E(U(t)) = 1/2 − Δ(q, cos αt) / (2 (q²+1)⁴).
double e_closed(const DeformParam& q, double t);

// --- Haar sampling ---------------------------------------------------------

std::vector<cplx> haar_state(CounterRng& rng, std::size_t dim);

struct ProductState {
  std::vector<cplx> a;
  std::vector<cplx> b;
};

ProductState haar_product_state(CounterRng& rng, BipartiteDims dims = kTwoQubits);

/// Haar-random unitary (Gram–Schmidt on a complex Ginibre matrix).
ComplexMatrix haar_unitary(CounterRng& rng, std::size_t dim);

/// Linear entropy 1 − Tr ρ_A² of U (ψ_A ⊗ ψ_B).
double output_linear_entropy(const ComplexMatrix& u, const ProductState& psi,
                             BipartiteDims dims = kTwoQubits);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo entangling power. Sample i draws from CounterRng(seed, i), so the
/// result is bit-identical for every `threads` value. Requires n_samples >= 100.
McEstimate ep_monte_carlo(const ComplexMatrix& u, std::size_t n_samples, std::uint64_t seed,
                          BipartiteDims dims = kTwoQubits, unsigned threads = 1);

// --- Time maximization -----------------------------------------------------

struct EMax {
  double t_star = 0.0;
  double e_max = 0.0;
};

/// Maximizes e_closed over one period [0, 2π/α]: 512-point grid followed by
/// golden-section refinement to a bracket of 1e-10.
EMax maximize_e_over_t(const DeformParam& q);

// --- Sweep rows ------------------------------------------------------------

struct EntanglementRecord {
  double q = 1.0;
  double t = 0.0;
  double e = 0.0;                      // closed form
  double e_tilde = 0.0;                // mixed invariant of the closed-form U
  double ep = 0.0;                     // invariant formula on the closed-form U
  double choi_vs_trace_dev = 0.0;      // |E_choi − E_trace| on the closed-form U
  double closed_vs_numeric_dev = 0.0;  // |E_closed − E_choi(exp_hermitian U)|
};

EntanglementRecord entanglement_record(const DeformParam& q, double t);

}  // namespace qdeform
