#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cocopos/blockops.hpp"
#include "cocopos/densemat.hpp"

namespace cocopos {

// Linear map M_n -> M_k stored by its basis images: images()[i*n + j] is
// Phi(E_ij). Immutable after construction.
class LinearMap {
 public:
  // Throws ShapeError unless there are n*n images, each k x k.
  LinearMap(std::size_t n, std::size_t k, std::vector<ComplexMatrix> basis_images);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<ComplexMatrix>& basis_images() const noexcept { return images_; }
  const ComplexMatrix& image(std::size_t i, std::size_t j) const { return images_.at(i * n_ + j); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<ComplexMatrix> images_;
};

enum class BuiltinMap {
  kPhi,       // X -> (tr X) I + X
  kPsi,       // X -> (tr X) I - X
  kIdentity,
  kTranspose,
  kTraceMap,  // X -> [[tr X]], codomain M_1
};

// Accepts "phi", "psi", "identity", "transpose", "trace_map"; throws
// UsageError otherwise.
BuiltinMap parse_builtin_map(std::string_view name);
std::string_view builtin_map_name(BuiltinMap map);

LinearMap builtin_map(BuiltinMap map, std::size_t n);

// sum_ij X(i, j) Phi(E_ij). Throws ShapeError unless X is n x n.
ComplexMatrix apply_map(const LinearMap& phi, const ComplexMatrix& x);

// [Phi(E_ij)]_{i,j}, block shape (n, k). Only m == n is supported (UsageError
// otherwise); by Choi's theorem that block size already decides complete
// positivity.
BlockMatrix choi_matrix(const LinearMap& phi, std::size_t m);

// [Phi(E_ji)]_{i,j} == partial_transpose(choi_matrix(phi, n)).
BlockMatrix co_choi_matrix(const LinearMap& phi);

struct Certificate {
  bool certified = false;
  double min_eig = 0.0;
};

Certificate certify_completely_positive(const LinearMap& phi, double tol = kDefaultTolerance);
Certificate certify_completely_copositive(const LinearMap& phi, double tol = kDefaultTolerance);

// [Phi(A_ji)]_{i,j} for a block input A in M_m(M_n); block shape (m, k).
BlockMatrix copositive_image(const LinearMap& phi, const BlockMatrix& a);

inline constexpr std::size_t kDefaultWitnessTrials = 500;

// Samples seeded PSD inputs A in M_m(M_n) (trial t uses sub-seed
// derive_seed(seed, t), rank cycling through 1..mn) and returns the first A
// whose copositive image is not PSD. An empty result certifies nothing.
std::optional<BlockMatrix> random_cocopositivity_witness(const LinearMap& phi, std::size_t m,
                                                         std::size_t trials, std::uint64_t seed,
                                                         double tol = kDefaultTolerance);

}  // namespace cocopos
