#include "cocopos/blockops.hpp"

#include <sstream>
#include <utility>

#include "cocopos/errors.hpp"

namespace cocopos {

BlockMatrix::BlockMatrix(BlockShape shape, ComplexMatrix mat) : shape_(shape), mat_(std::move(mat)) {
  if (shape_.m == 0 || shape_.n == 0) throw ShapeError("BlockMatrix: block shape must be positive");
  if (mat_.rows() != shape_.side() || mat_.cols() != shape_.side()) {
    std::ostringstream os;
    os << "BlockMatrix: " << mat_.rows() << "x" << mat_.cols() << " matrix does not have block shape ("
       << shape_.m << ", " << shape_.n << ")";
    throw ShapeError(os.str());
  }
}

BlockMatrix BlockMatrix::identity(BlockShape shape) {
  return BlockMatrix(shape, ComplexMatrix::identity(shape.side()));
}

ComplexMatrix block_get(const BlockMatrix& a, std::size_t i, std::size_t j) {
  if (i >= a.m() || j >= a.m()) {
    std::ostringstream os;
    os << "block_get: block (" << i << ", " << j << ") out of range for m = " << a.m();
    throw IndexError(os.str());
  }
  const std::size_t n = a.n();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) out(r, s) = a.mat()(i * n + r, j * n + s);
  }
  return out;
}

BlockMatrix block_assemble(std::size_t m, std::span<const ComplexMatrix> blocks) {
  if (m == 0 || blocks.size() != m * m) throw ShapeError("block_assemble: need m*m blocks");
  const std::size_t n = blocks.front().rows();
  ComplexMatrix mat(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const ComplexMatrix& b = blocks[i * m + j];
      if (b.rows() != n || b.cols() != n) throw ShapeError("block_assemble: blocks differ in shape");
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) mat(i * n + r, j * n + s) = b(r, s);
      }
    }
  }
  return BlockMatrix({m, n}, std::move(mat));
}

BlockMatrix partial_transpose(const BlockMatrix& a) {
  const std::size_t m = a.m();
  const std::size_t n = a.n();
  ComplexMatrix out(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) out(i * n + r, j * n + s) = a.mat()(j * n + r, i * n + s);
      }
    }
  }
  return BlockMatrix(a.shape(), std::move(out));
}

ComplexMatrix partial_trace_1(const BlockMatrix& a) {
  const std::size_t n = a.n();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < a.m(); ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) out(r, s) += a.mat()(i * n + r, i * n + s);
    }
  }
  return out;
}

ComplexMatrix partial_trace_2(const BlockMatrix& a) {
  const std::size_t m = a.m();
  const std::size_t n = a.n();
  ComplexMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex sum = 0.0;
      for (std::size_t r = 0; r < n; ++r) sum += a.mat()(i * n + r, j * n + r);
      out(i, j) = sum;
    }
  }
  return out;
}

BlockMatrix realign(const BlockMatrix& a) {
  const std::size_t m = a.m();
  const std::size_t n = a.n();
  ComplexMatrix out(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) out(r * m + i, s * m + j) = a.mat()(i * n + r, j * n + s);
      }
    }
  }
  return BlockMatrix({n, m}, std::move(out));
}

PptResult is_ppt(const BlockMatrix& a, double tol) {
  const PsdResult full = is_psd(a.mat(), tol);
  const PsdResult tau = is_psd(partial_transpose(a).mat(), tol);
  return {full.psd && tau.psd, full.min_eig, tau.min_eig};
}

}  // namespace cocopos
