#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cocopos {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

// Dense complex matrix, row-major. Indices are 0-based. A 0x0 matrix is
// legal (empty submatrices, det of an empty index set).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  // Takes ownership of row-major entries. Throws ShapeError when the entry
  // count is not rows*cols and ValidationError on NaN/Inf.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  // Row-wise literal, mostly for tests: {{1, 2}, {3, 4}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  // Matrix unit: 1 at (i, j), zero elsewhere.
  static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  // Bounds-checked access; throws IndexError.
  const Complex& at(std::size_t i, std::size_t j) const;

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

ComplexMatrix matmul(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix conj_transpose(const ComplexMatrix& x);
// Plain transpose, no conjugation.
ComplexMatrix transpose(const ComplexMatrix& x);
Complex trace(const ComplexMatrix& x);
ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

// LU with partial pivoting; det of the 0x0 matrix is 1.
Complex determinant(const ComplexMatrix& x);

double frobenius_norm(const ComplexMatrix& x);
// Largest |x(i,j)| difference; shapes must agree.
double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y);

// ||X - X*||_F <= tol * max(1, ||X||_F).
bool is_hermitian(const ComplexMatrix& x, double tol = 1e-10);

// Nonnegative real diagonal and |x_ii| >= sum_{j != i} |x_ij| on every row.
// Evaluated exactly on the stored doubles, so it is an exact test for
// matrices with small integer entries.
bool is_row_diagonally_dominant(const ComplexMatrix& x);

struct EigenResult {
  std::vector<double> values;  // ascending
  double offdiag_residual = 0.0;
  int sweeps = 0;
};

// Cyclic complex Jacobi on (X + X*)/2. Throws DomainError when X is not
// Hermitian within 1e-10 * max(1, ||X||_F) and ConvergenceError when the
// off-diagonal mass is still above 1e-13 * max(1, ||X||_F) after 100 sweeps.
EigenResult hermitian_eigenvalues(const ComplexMatrix& x);

double min_eigenvalue(const ComplexMatrix& x);

struct PsdResult {
  bool psd = false;
  double min_eig = 0.0;
};

// psd iff min eigenvalue >= -tol * max(1, ||X||_F).
PsdResult is_psd(const ComplexMatrix& x, double tol = kDefaultTolerance);

}  // namespace cocopos
