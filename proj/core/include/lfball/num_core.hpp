#pragma once

// Dense complex linear algebra for the small matrices (n <= ~64) that occur
// in this library: Hermitian eigenproblems, PSD factorization, generalized
// eigenvalues, general eigenvalues and matrix polynomials.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lfball {

using cplx = std::complex<double>;

/// Tolerance used wherever a caller does not supply one.
inline constexpr double kDefaultTol = 1e-9;

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t n) : data_(n) {}
  ComplexVector(std::initializer_list<cplx> values) : data_(values) {}
  explicit ComplexVector(std::vector<cplx> values) : data_(std::move(values)) {}

  static ComplexVector zeros(std::size_t n) { return ComplexVector(n); }
  static ComplexVector unit(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }
  std::span<const cplx> view() const noexcept { return data_; }
  const std::vector<cplx>& values() const noexcept { return data_; }

  double squared_norm() const;
  double norm() const;
  bool all_finite() const;

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(cplx s);

 private:
  std::vector<cplx> data_;
};

ComplexVector operator+(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a, const ComplexVector& b);
ComplexVector operator*(cplx s, ComplexVector v);

/// Standard Hermitian inner product <z, w> = sum z_k conj(w_k).
cplx inner(const ComplexVector& z, const ComplexVector& w);

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const cplx> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix hermitian_part() const;  ///< (M + M*) / 2
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);
  ComplexVector column(std::size_t j) const;
  ComplexVector row(std::size_t i) const;

  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);

/// Eigenvalues of the Hermitian part of M, ascending. Householder
/// tridiagonalization followed by implicit QL.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Smallest eigenvalue of (M + M*) / 2.
double hermitian_min_eig(const ComplexMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k belongs to values[k]
};

/// Full eigendecomposition of (M + M*) / 2 by cyclic Jacobi rotations.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// X with X*X = M (negative eigenvalues in [-tol, 0] clamped to zero).
/// Throws NotPsdError when the smallest eigenvalue is below -tol.
ComplexMatrix psd_factor(const ComplexMatrix& m, double tol = kDefaultTol);

/// Lower-triangular L with L L* = M. Throws IllConditionedError on a
/// non-positive pivot.
ComplexMatrix cholesky(const ComplexMatrix& m);

/// max over v != 0 of <Anum v, v> / <Bden v, v> for Hermitian Anum and
/// positive definite Bden.
double generalized_max_eig(const ComplexMatrix& anum, const ComplexMatrix& bden);

/// sum_k coeffs[k] A^k by Horner's rule.
ComplexMatrix mat_poly_eval(std::span<const cplx> coeffs, const ComplexMatrix& a);

/// Eigenvalues of a general square matrix (Hessenberg reduction + shifted QR).
std::vector<cplx> eigenvalues(const ComplexMatrix& m);

/// Solve A x = b by LU with partial pivoting. Throws IllConditionedError
/// when A is numerically singular.
ComplexVector solve(const ComplexMatrix& a, const ComplexVector& b);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& a);

/// Orthonormal basis (as columns) of { v : |M v| <= tol |v| }.
ComplexMatrix null_space(const ComplexMatrix& m, double tol);

}  // namespace lfball
