#include "cocopos/maps.hpp"

#include <string>
#include <utility>

#include "cocopos/errors.hpp"
#include "cocopos/randgen.hpp"

namespace cocopos {

LinearMap::LinearMap(std::size_t n, std::size_t k, std::vector<ComplexMatrix> basis_images)
    : n_(n), k_(k), images_(std::move(basis_images)) {
  if (n_ == 0 || k_ == 0) throw ShapeError("LinearMap: dimensions must be positive");
  if (images_.size() != n_ * n_) throw ShapeError("LinearMap: expected n*n basis images");
  for (const ComplexMatrix& img : images_) {
    if (img.rows() != k_ || img.cols() != k_) throw ShapeError("LinearMap: basis image is not k x k");
  }
}

BuiltinMap parse_builtin_map(std::string_view name) {
  if (name == "phi") return BuiltinMap::kPhi;
  if (name == "psi") return BuiltinMap::kPsi;
  if (name == "identity") return BuiltinMap::kIdentity;
  if (name == "transpose") return BuiltinMap::kTranspose;
  if (name == "trace_map") return BuiltinMap::kTraceMap;
  throw UsageError("unknown builtin map '" + std::string(name) + "'");
}

std::string_view builtin_map_name(BuiltinMap map) {
  switch (map) {
    case BuiltinMap::kPhi: return "phi";
    case BuiltinMap::kPsi: return "psi";
    case BuiltinMap::kIdentity: return "identity";
    case BuiltinMap::kTranspose: return "transpose";
    case BuiltinMap::kTraceMap: return "trace_map";
  }
  return "unknown";
}

LinearMap builtin_map(BuiltinMap map, std::size_t n) {
  if (n == 0) throw UsageError("builtin_map: n must be positive");
  const std::size_t k = map == BuiltinMap::kTraceMap ? 1 : n;
  std::vector<ComplexMatrix> images;
  images.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix e = ComplexMatrix::unit(n, n, i, j);
      const Complex tr = i == j ? 1.0 : 0.0;
      switch (map) {
        case BuiltinMap::kPhi: images.push_back(tr * ComplexMatrix::identity(n) + e); break;
        case BuiltinMap::kPsi: images.push_back(tr * ComplexMatrix::identity(n) - e); break;
        case BuiltinMap::kIdentity: images.push_back(e); break;
        case BuiltinMap::kTranspose: images.push_back(transpose(e)); break;
        case BuiltinMap::kTraceMap: images.push_back(ComplexMatrix(1, 1, {tr})); break;
      }
    }
  }
  return LinearMap(n, k, std::move(images));
}

ComplexMatrix apply_map(const LinearMap& phi, const ComplexMatrix& x) {
  if (x.rows() != phi.n() || x.cols() != phi.n()) {
    throw ShapeError("apply_map: input must be " + std::to_string(phi.n()) + "x" + std::to_string(phi.n()));
  }
  ComplexMatrix out(phi.k(), phi.k());
  for (std::size_t i = 0; i < phi.n(); ++i) {
    for (std::size_t j = 0; j < phi.n(); ++j) {
      if (x(i, j) != Complex{}) out += x(i, j) * phi.image(i, j);
    }
  }
  return out;
}

BlockMatrix choi_matrix(const LinearMap& phi, std::size_t m) {
  if (m != phi.n()) {
    throw UsageError("choi_matrix: block count m must equal the domain dimension n = " +
                     std::to_string(phi.n()));
  }
  return block_assemble(m, phi.basis_images());
}

BlockMatrix co_choi_matrix(const LinearMap& phi) {
  const std::size_t n = phi.n();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) blocks.push_back(phi.image(j, i));
  }
  return block_assemble(n, blocks);
}

Certificate certify_completely_positive(const LinearMap& phi, double tol) {
  const PsdResult r = is_psd(choi_matrix(phi, phi.n()).mat(), tol);
  return {r.psd, r.min_eig};
}

Certificate certify_completely_copositive(const LinearMap& phi, double tol) {
  const PsdResult r = is_psd(co_choi_matrix(phi).mat(), tol);
  return {r.psd, r.min_eig};
}

BlockMatrix copositive_image(const LinearMap& phi, const BlockMatrix& a) {
  if (a.n() != phi.n()) throw ShapeError("copositive_image: inner block size must equal map domain");
  const std::size_t m = a.m();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) blocks.push_back(apply_map(phi, block_get(a, j, i)));
  }
  return block_assemble(m, blocks);
}

std::optional<BlockMatrix> random_cocopositivity_witness(const LinearMap& phi, std::size_t m,
                                                         std::size_t trials, std::uint64_t seed,
                                                         double tol) {
  if (m == 0) throw UsageError("random_cocopositivity_witness: m must be positive");
  const std::size_t dim = m * phi.n();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t rank = 1 + t % dim;
    BlockMatrix a({m, phi.n()}, random_psd(dim, rank, derive_seed(seed, t)));
    if (is_psd(copositive_image(phi, a).mat(), tol).psd) continue;
    // Re-verify both halves of the claim before handing the witness out.
    if (is_psd(a.mat(), tol).psd && !is_psd(copositive_image(phi, a).mat(), tol).psd) return a;
  }
  return std::nullopt;
}

}  // namespace cocopos
