#include "qdeform/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdeform {

namespace {

void require_same_shape(const ComplexMatrix& x, const ComplexMatrix& y, const char* what) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                                " vs " + std::to_string(y.rows()) + "x" +
                                std::to_string(y.cols()) + ")");
  }
}

void require_square(const ComplexMatrix& x, const char* what) {
  if (!x.is_square()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
}

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// Row-major strides: the first factor is the slowest index.
std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * dims[k];
  }
  return strides;
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) acc += std::norm(a(r, c));
    }
  }
  return std::sqrt(acc);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows x cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ComplexMatrix: ragged initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> v) {
  return ComplexMatrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, cplx scalar) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("operator*: inner dimensions differ");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cplx a = lhs(i, k);
      if (a == cplx{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const cplx a = x(i, j);
      for (std::size_t k = 0; k < y.rows(); ++k) {
        for (std::size_t l = 0; l < y.cols(); ++l) {
          out(i * y.rows() + k, j * y.cols() + l) = a * y(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& x) {
  ComplexMatrix out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = std::conj(x(i, j));
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& x) {
  ComplexMatrix out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = x(i, j);
  }
  return out;
}

cplx trace(const ComplexMatrix& x) {
  require_square(x, "trace");
  cplx acc{};
  for (std::size_t i = 0; i < x.rows(); ++i) acc += x(i, i);
  return acc;
}

double frob_norm(const ComplexMatrix& x) {
  double acc = 0.0;
  for (const auto& e : x.data()) acc += std::norm(e);
  return std::sqrt(acc);
}

double frob_dist(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "frob_dist");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::norm(x.data()[i] - y.data()[i]);
  return std::sqrt(acc);
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  return x * y - y * x;
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  return frob_dist(m, dagger(m));
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity_defect");
  return frob_dist(dagger(u) * u, ComplexMatrix::identity(u.rows()));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_square(rho, "partial_trace");
  if (dims.empty() || product(dims) != rho.rows()) {
    throw std::invalid_argument("partial_trace: product of factor dimensions does not match");
  }
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size() || kept[k]) {
      throw std::invalid_argument("partial_trace: invalid keep set");
    }
    kept[k] = true;
  }

  const auto strides = strides_of(dims);
  std::vector<std::size_t> kept_dims;
  std::vector<std::size_t> kept_pos(dims.size(), 0);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (kept[k]) {
      kept_pos[k] = kept_dims.size();
      kept_dims.push_back(dims[k]);
    }
  }
  const auto kept_strides = strides_of(kept_dims);
  const std::size_t out_dim = product(kept_dims);

  // Split a flat index into its kept-factor index and its traced-factor index.
  const std::size_t n = rho.rows();
  std::vector<std::size_t> kept_index(n), traced_index(n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t ki = 0, ti = 0;
    std::size_t traced_stride = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
      const std::size_t digit = (flat / strides[k]) % dims[k];
      if (kept[k]) {
        ki += digit * kept_strides[kept_pos[k]];
      } else {
        ti += digit * traced_stride;
        traced_stride *= dims[k];
      }
    }
    kept_index[flat] = ki;
    traced_index[flat] = ti;
  }

  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += rho(i, j);
    }
  }
  return out;
}

ComplexMatrix permutation_operator(std::span<const std::size_t> dims,
                                   std::span<const std::size_t> perm) {
  if (dims.empty() || perm.size() != dims.size()) {
    throw std::invalid_argument("permutation_operator: perm size does not match dims");
  }
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t p : perm) {
    if (p >= dims.size() || seen[p]) {
      throw std::invalid_argument("permutation_operator: not a permutation");
    }
    seen[p] = true;
  }
  std::vector<std::size_t> out_dims(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[perm[k]];

  const auto in_strides = strides_of(dims);
  const auto out_strides = strides_of(out_dims);
  const std::size_t n = product(dims);
  ComplexMatrix p(n, n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t target = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t digit = (flat / in_strides[perm[k]]) % dims[perm[k]];
      target += digit * out_strides[k];
    }
    p(target, flat) = 1.0;
  }
  return p;
}

ComplexMatrix swap_operator(std::span<const std::size_t> dims, std::size_t i, std::size_t j) {
  if (i >= dims.size() || j >= dims.size()) {
    throw std::invalid_argument("swap_operator: factor index out of range");
  }
  if (dims[i] != dims[j]) {
    throw std::invalid_argument("swap_operator: swapped factors must have equal dimension");
  }
  std::vector<std::size_t> perm(dims.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[i], perm[j]);
  return permutation_operator(dims, perm);
}

HermitianEigen eigh(const ComplexMatrix& h) {
  require_square(h, "eigh");
  if (hermiticity_defect(h) > kDefaultTolerance) {
    throw std::invalid_argument("eigh: matrix is not Hermitian");
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  // Off-diagonal mass must drop below 1e-14, relative to ‖H‖_F once that exceeds 1.
  const double threshold = 1e-14 * std::max(1.0, frob_norm(h));
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps) {
      throw std::runtime_error("eigh: Jacobi iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        // Rotate in the (p,q) plane with G = Φ·R, where Φ = diag(1, e^{-iφ})
        // removes the phase of a_pq and R is the real Jacobi rotation.
        const cplx phase = b / mag;  // e^{iφ}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx gqp = -s * std::conj(phase);
        const cplx gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A G
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + gqp * akq;
          a(k, q) = s * akp + gqq * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- G† A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // V <- V G
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + gqp * vkq;
          v(k, q) = s * vkp + gqq * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

std::vector<double> eigvalsh(const ComplexMatrix& h) { return eigh(h).values; }

ComplexMatrix hermitian_function(const ComplexMatrix& h, const std::function<cplx(double)>& f) {
  const auto eig = eigh(h);
  const std::size_t n = h.rows();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t col = 0; col < n; ++col) {
    const cplx fv = f(eig.values[col]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, col) *= fv;
  }
  return scaled * dagger(eig.vectors);
}

ComplexMatrix exp_hermitian(const ComplexMatrix& h, cplx scale) {
  return hermitian_function(h, [scale](double lambda) { return std::exp(scale * lambda); });
}

}  // namespace qdeform
