#include "cocopos/randgen.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "cocopos/errors.hpp"

namespace cocopos {

namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

#ifdef COCOPOS_VALIDATE_GENERATORS
constexpr double kValidationTol = 1e-9;

void validate_psd(const ComplexMatrix& x) {
  const PsdResult r = is_psd(x, kValidationTol);
  if (!r.psd) throw Error("generator emitted a non-PSD matrix, min eig " + std::to_string(r.min_eig));
}

void validate_ppt(const BlockMatrix& a) {
  const PptResult r = is_ppt(a, kValidationTol);
  if (!r.ppt) throw Error("generator emitted a non-PPT matrix");
}
#else
void validate_psd(const ComplexMatrix&) {}
void validate_ppt(const BlockMatrix&) {}
#endif

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
  return mix64(key_ ^ mix64(counter));
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

Complex CounterRng::complex_gaussian(std::uint64_t position) const noexcept {
  const double u1 = uniform(2 * position);
  const double u2 = uniform(2 * position + 1);
  const double radius = std::sqrt(-std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL));
}

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  const CounterRng rng(seed);
  ComplexMatrix g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = rng.complex_gaussian(r * cols + c);
  }
  return g;
}

ComplexMatrix random_psd(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (rank < 1 || rank > dim) {
    throw UsageError("random_psd: rank " + std::to_string(rank) + " outside 1.." + std::to_string(dim));
  }
  const ComplexMatrix g = random_gaussian(rank, dim, seed);
  ComplexMatrix gram = matmul(conj_transpose(g), g);
  for (std::size_t i = 0; i < dim; ++i) {
    gram(i, i) = gram(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex avg = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
      gram(i, j) = avg;
      gram(j, i) = std::conj(avg);
    }
  }
  validate_psd(gram);
  return gram;
}

BlockMatrix random_separable(std::size_t m, std::size_t n, std::size_t terms, std::uint64_t seed) {
  if (terms < 1) throw UsageError("random_separable: terms must be positive");
  ComplexMatrix sum(m * n, m * n);
  for (std::size_t t = 0; t < terms; ++t) {
    const std::uint64_t term_seed = derive_seed(seed, t);
    sum += kron(random_psd(m, m, derive_seed(term_seed, 0)), random_psd(n, n, derive_seed(term_seed, 1)));
  }
  BlockMatrix out({m, n}, std::move(sum));
  validate_ppt(out);
  return out;
}

PptSample random_ppt(std::size_t m, std::size_t n, std::uint64_t seed, std::size_t max_attempts) {
  if (max_attempts < 1) throw UsageError("random_ppt: max_attempts must be positive");
  const std::size_t dim = m * n;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    BlockMatrix candidate({m, n}, random_psd(dim, dim, derive_seed(seed, attempt)));
    if (is_ppt(candidate).ppt) return {std::move(candidate), false, attempt + 1};
  }
  return {random_separable(m, n, 2, derive_seed(seed, max_attempts)), true, max_attempts};
}

GenKind parse_gen_kind(std::string_view name) {
  if (name == "gram_psd") return GenKind::kGramPsd;
  if (name == "separable") return GenKind::kSeparable;
  if (name == "ppt_rejection") return GenKind::kPptRejection;
  if (name == "low_rank") return GenKind::kLowRank;
  throw UsageError("unknown generator kind '" + std::string(name) + "'");
}

std::string_view gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::kGramPsd: return "gram_psd";
    case GenKind::kSeparable: return "separable";
    case GenKind::kPptRejection: return "ppt_rejection";
    case GenKind::kLowRank: return "low_rank";
  }
  return "unknown";
}

BlockMatrix generate(const GenSpec& spec) {
  const std::size_t dim = spec.m * spec.n;
  switch (spec.kind) {
    case GenKind::kGramPsd: return BlockMatrix({spec.m, spec.n}, random_psd(dim, dim, spec.seed));
    case GenKind::kLowRank:
      return BlockMatrix({spec.m, spec.n}, random_psd(dim, spec.rank_or_terms, spec.seed));
    case GenKind::kSeparable: return random_separable(spec.m, spec.n, spec.rank_or_terms, spec.seed);
    case GenKind::kPptRejection: return random_ppt(spec.m, spec.n, spec.seed).matrix;
  }
  throw UsageError("generate: unhandled kind");
}

}  // namespace cocopos
