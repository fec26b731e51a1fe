#pragma once

// Dense complex matrix kernel.
//
// Everything in the library is expressed through ComplexMatrix: single-site
// generators, composite Hamiltonians, unitaries, density matrices and the
// permutation operators acting on the doubled space. Dimensions never exceed a
// few hundred, so storage is plain row-major dense.
//
// Tensor-factor convention: the left Kronecker factor is the slow (outer)
// index. For two qubits the basis order is |00>, |01>, |10>, |11>. Factor
// indices in partial_trace / swap_operator / permutation_operator are 0-based,
// so the doubled-space swap usually written T13 is swap_operator(dims, 0, 2).

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdeform {

using cplx = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// Column vector (n x 1).
  static ComplexMatrix column(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<cplx> data() noexcept { return entries_; }
  std::span<const cplx> data() const noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cplx scalar);

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix dagger(const ComplexMatrix& x);
ComplexMatrix transpose(const ComplexMatrix& x);
cplx trace(const ComplexMatrix& x);
double frob_norm(const ComplexMatrix& x);
double frob_dist(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// ‖M − M†‖_F.
double hermiticity_defect(const ComplexMatrix& m);
/// ‖U†U − I‖_F.
double unitarity_defect(const ComplexMatrix& u);

/// Reduced matrix on the factors listed in `keep` (0-based, in any order; the
/// result keeps them in their original tensor order). An empty keep set yields
/// the 1x1 matrix holding trace(rho).
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Permutation operator P with P |i_0 ... i_{n-1}> = |j_0 ... j_{n-1}> where
/// output factor k carries input factor perm[k]. dims[k] is the dimension of
/// input factor k.
ComplexMatrix permutation_operator(std::span<const std::size_t> dims,
                                   std::span<const std::size_t> perm);

/// Permutation exchanging tensor factors i and j (0-based). Requires dims[i] == dims[j].
ComplexMatrix swap_operator(std::span<const std::size_t> dims, std::size_t i, std::size_t j);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are eigenvectors, matching `values`
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Throws
/// std::invalid_argument if the input is not Hermitian to 1e-10.
HermitianEigen eigh(const ComplexMatrix& h);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> eigvalsh(const ComplexMatrix& h);

/// f(H) = V f(Λ) V† for Hermitian H.
ComplexMatrix hermitian_function(const ComplexMatrix& h, const std::function<cplx(double)>& f);

/// exp(scale · H) via the Hermitian eigendecomposition.
ComplexMatrix exp_hermitian(const ComplexMatrix& h, cplx scale);

}  // namespace qdeform
