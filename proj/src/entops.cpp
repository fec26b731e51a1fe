#include "qdeform/entops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "qdeform/dynamics.hpp"

namespace qdeform {

namespace {

void require_unitary(const ComplexMatrix& u, BipartiteDims dims, const char* what) {
  if (dims.dA == 0 || dims.dB == 0) {
    throw std::invalid_argument(std::string(what) + ": subsystem dimensions must be positive");
  }
  if (!u.is_square() || u.rows() != dims.total()) {
    throw std::invalid_argument(std::string(what) + ": operator dimension does not match dA*dB");
  }
  if (unitarity_defect(u) > kUnitarityGate) {
    throw std::invalid_argument(std::string(what) + ": operator is not unitary");
  }
}

double doubled_norm(BipartiteDims dims) {
  const auto d = static_cast<double>(dims.total());
  return d * d;
}

// Tr(U⊗U · P · U†⊗U† · T13) for a doubled-space permutation P.
double permuted_trace(const ComplexMatrix& u, BipartiteDims dims, std::size_t i, std::size_t j) {
  const auto factors = dims.doubled();
  const ComplexMatrix uu = kron(u, u);
  const ComplexMatrix p = swap_operator(factors, i, j);
  const ComplexMatrix t13 = swap_operator(factors, 0, 2);
  return trace(uu * p * dagger(uu) * t13).real();
}

}  // namespace

std::vector<cplx> ChoiVector::regrouped() const {
  std::vector<cplx> out(amplitudes.size());
  std::size_t k = 0;
  for (std::size_t a = 0; a < dims.dA; ++a)
    for (std::size_t a2 = 0; a2 < dims.dA; ++a2)
      for (std::size_t b = 0; b < dims.dB; ++b)
        for (std::size_t b2 = 0; b2 < dims.dB; ++b2) out[k++] = at(a, b, a2, b2);
  return out;
}

ChoiVector choi_vector(const ComplexMatrix& u, BipartiteDims dims) {
  require_unitary(u, dims, "choi_vector");
  const std::size_t d = dims.total();
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  ChoiVector out{dims, std::vector<cplx>(d * d)};
  // (U ⊗ 1) Σ_i |i>|i> / √d has amplitude U(j, i)/√d on |j>|i>.
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) out.amplitudes[j * d + i] = u(j, i) * norm;
  }
  return out;
}

double op_entanglement_choi(const ComplexMatrix& u, BipartiteDims dims) {
  const ChoiVector v = choi_vector(u, dims);
  const ComplexMatrix ket = ComplexMatrix::column(v.amplitudes);
  const ComplexMatrix rho = ket * dagger(ket);
  const auto factors = dims.doubled();
  const std::array<std::size_t, 2> keep{0, 2};
  const ComplexMatrix sigma = partial_trace(rho, factors, keep);
  return 1.0 - trace(sigma * sigma).real();
}

double wz_trace(const ComplexMatrix& u, BipartiteDims dims) {
  require_unitary(u, dims, "wz_trace");
  return permuted_trace(u, dims, 0, 2);
}

double op_entanglement_trace(const ComplexMatrix& u, BipartiteDims dims) {
  return 1.0 - wz_trace(u, dims) / doubled_norm(dims);
}

double mixed_trace(const ComplexMatrix& u, BipartiteDims dims) {
  require_unitary(u, dims, "mixed_trace");
  return permuted_trace(u, dims, 1, 3);
}

double mixed_invariant(const ComplexMatrix& u, BipartiteDims dims) {
  if (dims.dA != dims.dB) {
    throw std::invalid_argument("mixed_invariant: the swap requires dA == dB");
  }
  return 1.0 - mixed_trace(u, dims) / doubled_norm(dims);
}

double swap_entanglement(BipartiteDims dims) {
  return 1.0 - 1.0 / static_cast<double>(dims.total());
}

double ep_formula(const ComplexMatrix& u, BipartiteDims dims) {
  const auto da = static_cast<double>(dims.dA);
  const auto db = static_cast<double>(dims.dB);
  const double prefactor = da * db / ((da + 1.0) * (db + 1.0));
  return prefactor *
         (op_entanglement_trace(u, dims) + mixed_invariant(u, dims) - swap_entanglement(dims));
}

double delta_qc(const DeformParam& q, double c) {
  const double q2 = q.q() * q.q();
  const double g = (q2 - 1.0) * (q2 - 1.0);
  return g * g * c * c + 8.0 * q2 * g * c + 16.0 * q2 * q2;
}

double e_closed(const DeformParam& q, double t) {
  // (q²+1)⁴ − Δ = (q²−1)² (1−c) [(q²−1)² (1+c) + 8q²], so E is evaluated in the
  // factored form, which is nonnegative term by term.
  const double q2 = q.q() * q.q();
  const double c = std::cos(q.alpha() * t);
  const double g = (q2 - 1.0) * (q2 - 1.0);
  const double p = (q2 + 1.0) * (q2 + 1.0);
  return g * (1.0 - c) * (g * (1.0 + c) + 8.0 * q2) / (2.0 * p * p);
}

std::vector<cplx> haar_state(CounterRng& rng, std::size_t dim) {
  std::vector<cplx> psi(dim);
  double norm2 = 0.0;
  for (auto& z : psi) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = {re, im};
    norm2 += re * re + im * im;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : psi) z *= inv;
  return psi;
}

ProductState haar_product_state(CounterRng& rng, BipartiteDims dims) {
  ProductState out;
  out.a = haar_state(rng, dims.dA);
  out.b = haar_state(rng, dims.dB);
  return out;
}

ComplexMatrix haar_unitary(CounterRng& rng, std::size_t dim) {
  ComplexMatrix g(dim, dim);
  for (auto& z : g.data()) z = {rng.normal(), rng.normal()};
  // Modified Gram–Schmidt: Q of the QR factorization with positive diag(R).
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t prev = 0; prev < col; ++prev) {
      cplx overlap{};
      for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(g(r, prev)) * g(r, col);
      for (std::size_t r = 0; r < dim; ++r) g(r, col) -= overlap * g(r, prev);
    }
    double n2 = 0.0;
    for (std::size_t r = 0; r < dim; ++r) n2 += std::norm(g(r, col));
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t r = 0; r < dim; ++r) g(r, col) *= inv;
  }
  return g;
}

double output_linear_entropy(const ComplexMatrix& u, const ProductState& psi, BipartiteDims dims) {
  const std::size_t d = dims.total();
  std::vector<cplx> in(d);
  for (std::size_t a = 0; a < dims.dA; ++a)
    for (std::size_t b = 0; b < dims.dB; ++b) in[a * dims.dB + b] = psi.a[a] * psi.b[b];
  std::vector<cplx> out(d);
  for (std::size_t r = 0; r < d; ++r) {
    cplx acc{};
    for (std::size_t c = 0; c < d; ++c) acc += u(r, c) * in[c];
    out[r] = acc;
  }
  double purity = 0.0;
  for (std::size_t a = 0; a < dims.dA; ++a) {
    for (std::size_t a2 = 0; a2 < dims.dA; ++a2) {
      cplx rho{};
      for (std::size_t b = 0; b < dims.dB; ++b) {
        rho += out[a * dims.dB + b] * std::conj(out[a2 * dims.dB + b]);
      }
      purity += std::norm(rho);
    }
  }
  return 1.0 - purity;
}

McEstimate ep_monte_carlo(const ComplexMatrix& u, std::size_t n_samples, std::uint64_t seed,
                          BipartiteDims dims, unsigned threads) {
  if (n_samples < 100) {
    throw std::invalid_argument("ep_monte_carlo: at least 100 samples are required");
  }
  require_unitary(u, dims, "ep_monte_carlo");

  std::vector<double> values(n_samples);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      CounterRng rng(seed, i);
      values[i] = output_linear_entropy(u, haar_product_state(rng, dims), dims);
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(threads, 1, n_samples);
  if (n_threads == 1) {
    work(0, n_samples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n_samples + n_threads - 1) / n_threads;
    for (std::size_t begin = 0; begin < n_samples; begin += chunk) {
      pool.emplace_back(work, begin, std::min(begin + chunk, n_samples));
    }
  }

  // Reductions run serially in sample order.
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n_samples);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / static_cast<double>(n_samples - 1);
  return {mean, std::sqrt(variance / static_cast<double>(n_samples)), n_samples};
}

EMax maximize_e_over_t(const DeformParam& q) {
  constexpr std::size_t kGrid = 512;
  constexpr double kBracket = 1e-10;
  const double period = evolution_period(q);
  const double step = period / static_cast<double>(kGrid - 1);
  auto f = [&q](double t) { return e_closed(q, t); };

  std::size_t best = 0;
  double best_e = f(0.0);
  for (std::size_t k = 1; k < kGrid; ++k) {
    const double e = f(static_cast<double>(k) * step);
    if (e > best_e) {
      best_e = e;
      best = k;
    }
  }
  EMax out{static_cast<double>(best) * step, best_e};

  double lo = best == 0 ? 0.0 : static_cast<double>(best - 1) * step;
  double hi = best + 1 >= kGrid ? period : static_cast<double>(best + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > kBracket) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  const double t_mid = 0.5 * (lo + hi);
  const double e_mid = f(t_mid);
  if (e_mid > out.e_max) out = {t_mid, e_mid};
  return out;
}

EntanglementRecord entanglement_record(const DeformParam& q, double t) {
  const ComplexMatrix u = evolve_closed(q, t).u;
  EntanglementRecord rec;
  rec.q = q.q();
  rec.t = t;
  rec.e = e_closed(q, t);
  rec.e_tilde = mixed_invariant(u);
  rec.ep = ep_formula(u);
  rec.choi_vs_trace_dev = std::abs(op_entanglement_choi(u) - op_entanglement_trace(u));
  rec.closed_vs_numeric_dev = std::abs(rec.e - op_entanglement_choi(evolve_oracle(q, t)));
  return rec;
}

}  // namespace qdeform
