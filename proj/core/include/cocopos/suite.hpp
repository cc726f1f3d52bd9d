#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cocopos/blockops.hpp"
#include "cocopos/inequalities.hpp"
#include "cocopos/matrix_io.hpp"

namespace cocopos {

enum class Suite {
  kTheorem2,     // check_copositive_partial_trace on PSD input
  kCorollary3,   // check_ppt_reduction on PPT input
  kCombined,     // check_combined_reduction on PPT input
  kUpperBound,   // check_upper_bound on PSD input
  kCorollary6,   // check_phi_lower on PSD input
  kBlock2,       // check_block2 on 2-block PSD input
  kThm8_9,       // check_trace_submatrix, exhaustive index pairs
  kEqlin,        // check_det_submatrix, exhaustive index pairs
  kChoiCerts,    // builtin map classification and co-Choi dominance
};

// Accepts the CLI names theorem2, corollary3, combined, upper_bound,
// corollary6, block2, thm8_9, eqlin, choi_certs. "all" is expanded by
// resolve_suites().
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
std::vector<Suite> all_suites();
// Expands "all", drops duplicates, keeps first-seen order. Throws
// UsageError on unknown names or an empty list.
std::vector<Suite> resolve_suites(const std::vector<std::string>& names);

enum class OutputFormat { kText, kJson };

// A matrix supplied from a file instead of a generator. Block suites need
// the block shape; the submatrix suites use the plain matrix.
struct ExplicitInput {
  std::string source;
  ComplexMatrix mat;
  std::optional<BlockShape> shape;
};

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  std::size_t trials = 1000;
  std::vector<BlockShape> shapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  std::vector<std::size_t> dims{4, 5};
  std::uint64_t seed = 42;
  double tol = kDefaultTolerance;
  OutputFormat format = OutputFormat::kText;
  // When nonempty, every selected suite runs once on each input instead of
  // on generated trials.
  std::vector<ExplicitInput> inputs;
};

// Throws UsageError: trials == 0, tol <= 0, empty shapes/dims where a
// selected suite needs them, zero-sized shapes, unknown suite names.
void validate_config(const SuiteConfig& config);

// Worst-case statistics for one (suite, check, shape) cell.
struct CheckAggregate {
  std::string check_name;
  std::vector<std::size_t> shape;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::optional<double> worst_residual_min_eig;
  std::optional<double> worst_scalar_gap;
  // min over checks of value/scale: >= -tol means every check passed.
  std::optional<double> worst_relative_margin;
};

// Everything needed to replay a failing check.
struct Counterexample {
  std::string suite;
  std::string check_name;
  std::uint64_t sub_seed = 0;
  std::size_t trial = 0;
  std::string generator;  // e.g. "gram_psd rank=3" or the input file
  Json matrix;            // matrix-format document of the input
  std::optional<std::vector<std::size_t>> alpha;
  std::optional<std::vector<std::size_t>> beta;
};

struct SuiteResult {
  Suite suite;
  std::vector<CheckAggregate> aggregates;
  // Every failing CheckReport, in trial order; failures[i] pairs with
  // counterexamples[i].
  std::vector<CheckReport> failures;
  std::vector<Counterexample> counterexamples;
};

struct RunSummary {
  std::size_t suites = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
};

struct RunReport {
  SuiteConfig config;
  std::vector<SuiteResult> suites;
  RunSummary summary;
  double duration_seconds = 0.0;

  bool all_passed() const noexcept { return summary.failures == 0; }
};

// Runs every selected suite; deterministic in config. Throws UsageError for
// an invalid config before doing any work. ConvergenceError propagates.
RunReport run_suite(const SuiteConfig& config);

// Sub-seed of trial `trial` of `suite` on shape/dim slot `slot`.
std::uint64_t trial_seed(std::uint64_t seed, Suite suite, std::size_t slot, std::size_t trial);

// Fixed key order; "duration_seconds" is the last key of the document and
// the only nondeterministic value.
Json report_to_json(const RunReport& report);
std::string report_to_text(const RunReport& report);

}  // namespace cocopos
