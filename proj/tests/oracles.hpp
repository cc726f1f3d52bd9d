#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code it is meant to check beyond ComplexMatrix storage.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "cocopos/densemat.hpp"

namespace oracle {

using cocopos::Complex;
using cocopos::ComplexMatrix;

// Test-side generator, deliberately unrelated to the library's RNG.
inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = {normal(gen), normal(gen)};
  }
  return x;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& gen) {
  ComplexMatrix x = random_matrix(n, n, gen);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
  }
  return h;
}

// G* G, assembled by explicit sums.
inline ComplexMatrix gram(const ComplexMatrix& g) {
  ComplexMatrix out(g.cols(), g.cols());
  for (std::size_t i = 0; i < g.cols(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < g.rows(); ++k) s += std::conj(g(k, i)) * g(k, j);
      out(i, j) = s;
    }
  }
  for (std::size_t i = 0; i < g.cols(); ++i) {
    out(i, i) = out(i, i).real();
    for (std::size_t j = i + 1; j < g.cols(); ++j) out(j, i) = std::conj(out(i, j));
  }
  return out;
}

inline ComplexMatrix random_psd(std::size_t n, std::size_t rank, std::mt19937_64& gen) {
  return gram(random_matrix(rank, n, gen));
}

// tr(XY) = sum_i sum_k x_ik y_ki.
inline Complex trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) s += x(i, k) * y(k, i);
  }
  return s;
}

// Entry-by-entry Kronecker product written from the block definition.
inline ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t gr = 0; gr < out.rows(); ++gr) {
    for (std::size_t gc = 0; gc < out.cols(); ++gc) {
      out(gr, gc) = x(gr / y.rows(), gc / y.cols()) * y(gr % y.rows(), gc % y.cols());
    }
  }
  return out;
}

// Laplace expansion along the first row.
inline Complex cofactor_determinant(const ComplexMatrix& x) {
  const std::size_t n = x.rows();
  if (n == 0) return 1.0;
  if (n == 1) return x(0, 0);
  Complex det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    ComplexMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) minor(i - 1, cc++) = x(i, j);
      }
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * x(0, c) * cofactor_determinant(minor);
  }
  return det;
}

// Roots of the characteristic polynomial of a 3x3 Hermitian matrix by the
// trigonometric cubic formula, ascending.
inline std::vector<double> charpoly_eigenvalues_3x3(const ComplexMatrix& a) {
  const double c2 = (a(0, 0) + a(1, 1) + a(2, 2)).real();
  double c1 = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) c1 += (a(i, i) * a(j, j) - a(i, j) * a(j, i)).real();
  }
  const double c0 = cofactor_determinant(a).real();
  // lambda^3 - c2 lambda^2 + c1 lambda - c0 = 0; shift lambda = t + c2/3.
  const double shift = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
  std::vector<double> roots;
  if (std::abs(p) < 1e-300) {
    roots.assign(3, shift + std::cbrt(-q));
  } else {
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) roots.push_back(shift + r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) worst = std::max(worst, std::abs(x(i, j) - y(i, j)));
  }
  return worst;
}

}  // namespace oracle
