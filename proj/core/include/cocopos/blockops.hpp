#pragma once

#include <cstddef>

#include "cocopos/densemat.hpp"

namespace cocopos {

// m x m grid of n x n blocks.
struct BlockShape {
  std::size_t m = 1;
  std::size_t n = 1;

  std::size_t side() const noexcept { return m * n; }
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

// An element of M_m(M_n). Block (i, j) occupies rows i*n .. i*n+n-1 and
// columns j*n .. j*n+n-1, the same layout kron() produces, so
// kron(X, Y) with X m x m and Y n x n is the block matrix [x_ij Y].
//
// The shape travels with the matrix; reading the same mn x mn data under a
// different factorization needs an explicit reshape().
class BlockMatrix {
 public:
  // Throws ShapeError if mat is not (m*n) x (m*n) or m, n is zero.
  BlockMatrix(BlockShape shape, ComplexMatrix mat);

  static BlockMatrix identity(BlockShape shape);

  const BlockShape& shape() const noexcept { return shape_; }
  std::size_t m() const noexcept { return shape_.m; }
  std::size_t n() const noexcept { return shape_.n; }
  const ComplexMatrix& mat() const noexcept { return mat_; }

  BlockMatrix reshape(BlockShape shape) const { return BlockMatrix(shape, mat_); }

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  BlockShape shape_;
  ComplexMatrix mat_;
};

// Block (i, j), 0-based. Throws IndexError when i or j >= m.
ComplexMatrix block_get(const BlockMatrix& a, std::size_t i, std::size_t j);

// Assembles an m x m grid of equally sized square blocks, row-major.
BlockMatrix block_assemble(std::size_t m, std::span<const ComplexMatrix> blocks);

// A^tau: block (i, j) of the result is block (j, i) of A. Blocks are moved,
// not transposed internally.
BlockMatrix partial_transpose(const BlockMatrix& a);

// tr_1 A = sum of the diagonal blocks (n x n).
ComplexMatrix partial_trace_1(const BlockMatrix& a);

// tr_2 A = [tr A_ij] (m x m).
ComplexMatrix partial_trace_2(const BlockMatrix& a);

// Realignment M_m(M_n) -> M_n(M_m): block (r, s) of the result is the m x m
// matrix [a^{ij}_{rs}]_{i,j}. Exchanges the tensor factors, so
// realign(kron(X, Y)) == kron(Y, X).
BlockMatrix realign(const BlockMatrix& a);

struct PptResult {
  bool ppt = false;
  double min_eig = 0.0;
  double min_eig_tau = 0.0;
};

// Both A and A^tau PSD within tol (see is_psd for the scale).
PptResult is_ppt(const BlockMatrix& a, double tol = kDefaultTolerance);

}  // namespace cocopos
