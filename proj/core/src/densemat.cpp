#include "cocopos/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "cocopos/errors.hpp"

namespace cocopos {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffdiagThreshold = 1e-13;
constexpr double kHermitianTolerance = 1e-10;

std::string shape_str(const ComplexMatrix& x) {
  std::ostringstream os;
  os << x.rows() << "x" << x.cols();
  return os.str();
}

void require_same_shape(const ComplexMatrix& x, const ComplexMatrix& y, const char* op) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(x) + " vs " + shape_str(y));
  }
}

void require_square(const ComplexMatrix& x, const char* op) {
  if (!x.is_square()) {
    throw ShapeError(std::string(op) + ": matrix must be square, got " + shape_str(x));
  }
}

double offdiag_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p, q). The unitary is the product of a
// phase diag(1, e^{-i phi}) that makes a(p, q) real and a real Givens
// rotation, applied as A <- U* A U.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * std::conj(phase);
  const Complex uqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    std::ostringstream os;
    os << "ComplexMatrix: " << entries_.size() << " entries for shape " << rows_ << "x" << cols_;
    throw ShapeError(os.str());
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ComplexMatrix: ragged row literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  if (i >= rows || j >= cols) throw IndexError("ComplexMatrix::unit: position out of range");
  ComplexMatrix m(rows, cols);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

const Complex& ComplexMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    std::ostringstream os;
    os << "ComplexMatrix::at(" << i << ", " << j << ") out of range for " << rows_ << "x" << cols_;
    throw IndexError(os.str());
  }
  return (*this)(i, j);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) { return matmul(lhs, rhs); }

ComplexMatrix matmul(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols() != y.rows()) {
    throw ShapeError("matmul: " + shape_str(x) + " times " + shape_str(y));
  }
  ComplexMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex{}) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix& x) {
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

Complex trace(const ComplexMatrix& x) {
  require_square(x, "trace");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) sum += x(i, i);
  return sum;
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Complex xij = x(i, j);
      for (std::size_t r = 0; r < y.rows(); ++r) {
        for (std::size_t s = 0; s < y.cols(); ++s) {
          out(i * y.rows() + r, j * y.cols() + s) = xij * y(r, s);
        }
      }
    }
  }
  return out;
}

Complex determinant(const ComplexMatrix& x) {
  require_square(x, "determinant");
  const std::size_t n = x.rows();
  ComplexMatrix lu = x;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > best) {
        best = std::abs(lu(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(col, c), lu(pivot, c));
      det = -det;
    }
    const Complex diag = lu(col, col);
    det *= diag;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / diag;
      if (factor == Complex{}) continue;
      for (std::size_t c = col + 1; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return det;
}

double frobenius_norm(const ComplexMatrix& x) {
  double sum = 0.0;
  for (const Complex& z : x.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_shape(x, y, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < x.entries().size(); ++k) {
    worst = std::max(worst, std::abs(x.entries()[k] - y.entries()[k]));
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& x, double tol) {
  if (!x.is_square()) return false;
  double sum = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) sum += std::norm(x(i, j) - std::conj(x(j, i)));
  }
  return std::sqrt(sum) <= tol * std::max(1.0, frobenius_norm(x));
}

bool is_row_diagonally_dominant(const ComplexMatrix& x) {
  require_square(x, "is_row_diagonally_dominant");
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const Complex d = x(i, i);
    if (d.imag() != 0.0 || d.real() < 0.0) return false;
    double off = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (j != i) off += std::abs(x(i, j));
    }
    if (d.real() < off) return false;
  }
  return true;
}

EigenResult hermitian_eigenvalues(const ComplexMatrix& x) {
  require_square(x, "hermitian_eigenvalues");
  if (!is_hermitian(x, kHermitianTolerance)) {
    throw DomainError("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
  }
  const std::size_t n = x.rows();
  ComplexMatrix a = 0.5 * (x + conj_transpose(x));
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double threshold = kOffdiagThreshold * std::max(1.0, frobenius_norm(x));
  EigenResult result;
  result.offdiag_residual = offdiag_mass(a);
  while (result.offdiag_residual >= threshold) {
    if (result.sweeps == kMaxSweeps) {
      throw ConvergenceError("hermitian_eigenvalues: no convergence in 100 sweeps",
                             result.offdiag_residual);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }
    ++result.sweeps;
    result.offdiag_residual = offdiag_mass(a);
  }

  result.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.values[i] = a(i, i).real();
  std::sort(result.values.begin(), result.values.end());
  return result;
}

double min_eigenvalue(const ComplexMatrix& x) {
  const EigenResult eig = hermitian_eigenvalues(x);
  return eig.values.empty() ? 0.0 : eig.values.front();
}

PsdResult is_psd(const ComplexMatrix& x, double tol) {
  const double min_eig = min_eigenvalue(x);
  return {min_eig >= -tol * std::max(1.0, frobenius_norm(x)), min_eig};
}

}  // namespace cocopos
