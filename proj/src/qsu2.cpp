#include "qdeform/qsu2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdeform {

DeformParam::DeformParam(double q) : q_(q), alpha_(q + 1.0 / q) {
  if (!std::isfinite(q) || q <= 0.0) {
    throw std::invalid_argument("DeformParam: q must be finite and positive, got " +
                                std::to_string(q));
  }
}

bool DeformParam::is_undeformed() const noexcept {
  return std::abs(q_ - 1.0) <= kUndeformedWindow;
}

Generator parse_generator(std::string_view tag) {
  if (tag == "Jz") return Generator::Jz;
  if (tag == "Jp" || tag == "J+") return Generator::Jp;
  if (tag == "Jm" || tag == "J-") return Generator::Jm;
  throw std::invalid_argument("unknown generator tag '" + std::string(tag) + "'");
}

double q_number(double x, const DeformParam& q) {
  if (q.is_undeformed()) return x;
  const double qq = q.q();
  // Same expression for numerator and denominator so that [1]_q == 1 exactly.
  return (std::pow(qq, x) - std::pow(qq, -x)) / (std::pow(qq, 1.0) - std::pow(qq, -1.0));
}

ComplexMatrix q_number(const ComplexMatrix& x, const DeformParam& q) {
  return hermitian_function(x, [&q](double v) { return cplx{q_number(v, q)}; });
}

IrrepMatrices build_irrep(SpinLabel label, const DeformParam& q) {
  const std::size_t n = label.dim();
  const double l = label.l();
  IrrepMatrices rep{label, q, ComplexMatrix(n, n), ComplexMatrix(n, n), ComplexMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) rep.jz(i, i) = label.m(i);
  // Index i+1 holds m, index i holds m+1.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double m = label.m(i + 1);
    const double elem = std::sqrt(q_number(l - m, q) * q_number(l + m + 1.0, q));
    rep.jp(i, i + 1) = elem;
    rep.jm(i + 1, i) = elem;
  }
  return rep;
}

ComplexMatrix q_power_jz(const IrrepMatrices& rep, double a) {
  std::vector<double> diag(rep.dim());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    diag[i] = a == 0.0 ? 1.0 : std::pow(rep.q.q(), a * rep.label.m(i));
  }
  return ComplexMatrix::diagonal(std::span<const double>(diag));
}

ComplexMatrix build_single_hamiltonian(const IrrepMatrices& rep) {
  const ComplexMatrix half = q_power_jz(rep, 0.5);
  return half * (rep.jp + rep.jm) * half;
}

ComplexMatrix antipode(Generator gen, const IrrepMatrices& rep) {
  switch (gen) {
    case Generator::Jz:
      return -rep.jz;
    case Generator::Jp:
      return rep.jp * cplx{-1.0 / rep.q.q()};
    case Generator::Jm:
      return rep.jm * cplx{-rep.q.q()};
  }
  throw std::invalid_argument("antipode: unknown generator");
}

}  // namespace qdeform
