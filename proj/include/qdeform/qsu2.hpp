#pragma once

// Spin-l irreducible representations of U_q(su(2)) for real q > 0.
//
// Basis ordering is by descending magnetic number m = l, l-1, ..., -l, so the
// spin-1/2 basis is (|up>, |down>) = (|0>, |1>).

#include <string_view>

#include "qdeform/matcore.hpp"

namespace qdeform {

/// Deformation parameter q > 0 with the cached combination alpha = q + 1/q.
class DeformParam {
 public:
  /// Throws std::invalid_argument unless q is finite and strictly positive.
  explicit DeformParam(double q);

  double q() const noexcept { return q_; }
  double alpha() const noexcept { return alpha_; }
  /// True when |q - 1| <= 1e-12; q-numbers then take their undeformed limit.
  bool is_undeformed() const noexcept;
  DeformParam inverse() const { return DeformParam(1.0 / q_); }

 private:
  double q_;
  double alpha_;
};

inline constexpr double kUndeformedWindow = 1e-12;

/// Spin label stored as 2l so half-integer spins stay exact.
class SpinLabel {
 public:
  explicit constexpr SpinLabel(unsigned two_l) : two_l_(two_l) {}
  static constexpr SpinLabel half() { return SpinLabel(1); }

  constexpr unsigned two_l() const noexcept { return two_l_; }
  constexpr std::size_t dim() const noexcept { return two_l_ + 1; }
  constexpr double l() const noexcept { return 0.5 * two_l_; }
  /// Magnetic number of basis vector `index` (index 0 is m = l).
  constexpr double m(std::size_t index) const noexcept {
    return 0.5 * (static_cast<double>(two_l_) - 2.0 * static_cast<double>(index));
  }

  friend constexpr bool operator==(SpinLabel, SpinLabel) = default;

 private:
  unsigned two_l_;
};

struct IrrepMatrices {
  SpinLabel label;
  DeformParam q;
  ComplexMatrix jz;  // diag(m)
  ComplexMatrix jp;  // raising
  ComplexMatrix jm;  // lowering, jm = dagger(jp)

  std::size_t dim() const noexcept { return label.dim(); }
};

enum class Generator { Jz, Jp, Jm };

/// Parses "Jz", "Jp"/"J+", "Jm"/"J-". Throws std::invalid_argument otherwise.
Generator parse_generator(std::string_view tag);

/// [x]_q = (q^x - q^-x) / (q - q^-1), equal to x in the undeformed limit.
double q_number(double x, const DeformParam& q);

/// [X]_q for a Hermitian matrix X, by functional calculus on its spectrum.
ComplexMatrix q_number(const ComplexMatrix& x, const DeformParam& q);

/// Irrep with <l,m+1| J+ |l,m> = sqrt([l-m]_q [l+m+1]_q).
IrrepMatrices build_irrep(SpinLabel label, const DeformParam& q);

/// q^{a·Jz}: diagonal with entries q^{a·m}.
ComplexMatrix q_power_jz(const IrrepMatrices& rep, double a);

/// H(q) = q^{Jz/2} (J+ + J-) q^{Jz/2}.
ComplexMatrix build_single_hamiltonian(const IrrepMatrices& rep);

/// Antipode on generators: S(Jz) = -Jz, S(J±) = -q^{∓1} J±.
ComplexMatrix antipode(Generator gen, const IrrepMatrices& rep);

}  // namespace qdeform
