#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "cocopos/blockops.hpp"
#include "cocopos/densemat.hpp"

namespace cocopos {

// Counter-based generator: every draw is a pure function of (key, counter),
// so streams can be split by trial without any shared state.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept;
  // Uniform on the open interval (0, 1).
  double uniform(std::uint64_t counter) const noexcept;
  // Standard complex Gaussian (E|z|^2 = 1) by Box-Muller on counters
  // 2*position and 2*position + 1.
  Complex complex_gaussian(std::uint64_t position) const noexcept;

 private:
  std::uint64_t key_;
};

// Independent sub-seed for stream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// rows x cols matrix of i.i.d. standard complex Gaussians.
ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed);

// G* G with G a rank x dim Gaussian matrix; exactly Hermitian. Throws
// UsageError unless 1 <= rank <= dim.
ComplexMatrix random_psd(std::size_t dim, std::size_t rank, std::uint64_t seed);

// sum_t kron(P_t, Q_t) with independent full-rank P_t (m x m), Q_t (n x n).
BlockMatrix random_separable(std::size_t m, std::size_t n, std::size_t terms, std::uint64_t seed);

inline constexpr std::size_t kDefaultPptAttempts = 50;

struct PptSample {
  BlockMatrix matrix;
  bool from_fallback = false;  // true when the separable fallback produced it
  std::size_t attempts = 0;    // rejection draws consumed
};

// Rejection-samples full-rank random_psd(mn, mn) until it is PPT, falling back
// to a 2-term random_separable after max_attempts rejections.
PptSample random_ppt(std::size_t m, std::size_t n, std::uint64_t seed,
                     std::size_t max_attempts = kDefaultPptAttempts);

enum class GenKind { kGramPsd, kSeparable, kPptRejection, kLowRank };

GenKind parse_gen_kind(std::string_view name);
std::string_view gen_kind_name(GenKind kind);

struct GenSpec {
  GenKind kind = GenKind::kGramPsd;
  std::size_t m = 2;
  std::size_t n = 2;
  // Rank for kLowRank, number of product terms for kSeparable, ignored
  // otherwise (kGramPsd is full rank).
  std::size_t rank_or_terms = 1;
  std::uint64_t seed = 0;
};

BlockMatrix generate(const GenSpec& spec);

}  // namespace cocopos
