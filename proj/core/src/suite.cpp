#include "cocopos/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <utility>

#include "cocopos/errors.hpp"
#include "cocopos/maps.hpp"
#include "cocopos/randgen.hpp"

namespace cocopos {

namespace {

constexpr Suite kSuiteOrder[] = {Suite::kTheorem2,   Suite::kCorollary3, Suite::kCombined,
                                 Suite::kUpperBound, Suite::kCorollary6, Suite::kBlock2,
                                 Suite::kThm8_9,     Suite::kEqlin,      Suite::kChoiCerts};

bool uses_shapes(Suite s) {
  return s != Suite::kThm8_9 && s != Suite::kEqlin && s != Suite::kChoiCerts;
}

bool uses_dims(Suite s) { return !uses_shapes(s); }

// Full rank, half rank, rank one, repeating.
std::size_t rank_for_trial(std::size_t dim, std::size_t trial) {
  switch (trial % 3) {
    case 0: return dim;
    case 1: return (dim + 1) / 2;
    default: return 1;
  }
}

// Unnormalized projector onto sum_i e_i (x) e_i, i < min(m, n).
BlockMatrix max_entangled(BlockShape shape) {
  ComplexMatrix mat(shape.side(), shape.side());
  const std::size_t k = std::min(shape.m, shape.n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) mat(i * shape.n + i, j * shape.n + j) = 1.0;
  }
  return BlockMatrix(shape, std::move(mat));
}

double relative_margin(const CheckReport& r) {
  double worst = std::numeric_limits<double>::infinity();
  for (const ResidualCheck& c : r.residuals) worst = std::min(worst, c.min_eig / c.scale);
  for (const ScalarGap& g : r.gaps) worst = std::min(worst, g.gap / g.scale);
  return worst;
}

// One generated or loaded input together with its provenance.
struct Sample {
  std::size_t trial = 0;
  std::uint64_t sub_seed = 0;
  std::string generator;
};

class SuiteRecorder {
 public:
  explicit SuiteRecorder(Suite suite) { result_.suite = suite; }

  void record(const CheckReport& report, const Sample& sample, const Json& matrix,
              const IndexSet* alpha = nullptr, const IndexSet* beta = nullptr) {
    CheckAggregate& agg = cell(report.check_name, report.shape);
    ++agg.checks;
    if (report.residual_min_eig) {
      agg.worst_residual_min_eig = std::min(agg.worst_residual_min_eig.value_or(*report.residual_min_eig),
                                            *report.residual_min_eig);
    }
    if (report.scalar_gap) {
      agg.worst_scalar_gap = std::min(agg.worst_scalar_gap.value_or(*report.scalar_gap), *report.scalar_gap);
    }
    if (!report.residuals.empty() || !report.gaps.empty()) {
      const double margin = relative_margin(report);
      agg.worst_relative_margin = std::min(agg.worst_relative_margin.value_or(margin), margin);
    }
    if (report.passed) return;
    ++agg.failures;
    CheckReport failed = report;
    failed.seed_info = seed_info(sample);
    result_.failures.push_back(std::move(failed));
    Counterexample cex;
    cex.suite = std::string(suite_name(result_.suite));
    cex.check_name = report.check_name;
    cex.sub_seed = sample.sub_seed;
    cex.trial = sample.trial;
    cex.generator = sample.generator;
    cex.matrix = matrix;
    if (alpha) cex.alpha = alpha->members();
    if (beta) cex.beta = beta->members();
    result_.counterexamples.push_back(std::move(cex));
  }

  void skip(const std::string& check_name, const std::vector<std::size_t>& shape) {
    ++cell(check_name, shape).skipped;
  }

  SuiteResult take() { return std::move(result_); }

 private:
  static std::string seed_info(const Sample& s) {
    std::ostringstream os;
    os << "trial=" << s.trial << " sub_seed=" << s.sub_seed << " generator=" << s.generator;
    return os.str();
  }

  CheckAggregate& cell(const std::string& check_name, const std::vector<std::size_t>& shape) {
    for (CheckAggregate& agg : result_.aggregates) {
      if (agg.check_name == check_name && agg.shape == shape) return agg;
    }
    CheckAggregate agg;
    agg.check_name = check_name;
    agg.shape = shape;
    result_.aggregates.push_back(std::move(agg));
    return result_.aggregates.back();
  }

  SuiteResult result_;
};

// A precondition violation on a generated input is a generator defect and
// counts as a failure; on a user-supplied input it is skipped.
template <typename Check>
void run_guarded(SuiteRecorder& rec, const std::string& check_name, const std::vector<std::size_t>& shape,
                 bool explicit_input, const Sample& sample, const Json& matrix, Check&& check,
                 const IndexSet* alpha = nullptr, const IndexSet* beta = nullptr) {
  try {
    rec.record(check(), sample, matrix, alpha, beta);
  } catch (const PreconditionError& e) {
    if (explicit_input) {
      rec.skip(check_name, shape);
      return;
    }
    CheckReport failed;
    failed.check_name = check_name;
    failed.passed = false;
    failed.shape = shape;
    failed.residual_min_eig = e.min_eigenvalue();
    failed.note = std::string("precondition violated: ") + e.what();
    rec.record(failed, sample, matrix, alpha, beta);
  }
}

using BlockCheck = CheckReport (*)(const BlockMatrix&, double);

struct BlockSuiteInfo {
  const char* check_name;
  BlockCheck check;
};

BlockSuiteInfo block_suite_info(Suite suite) {
  switch (suite) {
    case Suite::kTheorem2: return {"copositive_partial_trace", &check_copositive_partial_trace};
    case Suite::kCorollary3: return {"ppt_reduction", &check_ppt_reduction};
    case Suite::kCombined: return {"combined_reduction", &check_combined_reduction};
    case Suite::kUpperBound: return {"upper_bound", &check_upper_bound};
    case Suite::kCorollary6: return {"phi_lower", &check_phi_lower};
    case Suite::kBlock2: return {"block2", &check_block2};
    default: throw UsageError("not a block suite");
  }
}

BlockMatrix generate_block_input(Suite suite, BlockShape shape, std::size_t trial, std::uint64_t sub_seed,
                                 std::string& generator) {
  std::ostringstream gen;
  switch (suite) {
    case Suite::kCorollary3:
    case Suite::kCombined: {
      if (trial % 2 == 0) {
        PptSample s = random_ppt(shape.m, shape.n, sub_seed);
        gen << "ppt_rejection attempts=" << s.attempts << (s.from_fallback ? " fallback=separable" : "");
        generator = gen.str();
        return std::move(s.matrix);
      }
      const std::size_t terms = 1 + trial % 3;
      gen << "separable terms=" << terms;
      generator = gen.str();
      return random_separable(shape.m, shape.n, terms, sub_seed);
    }
    default: {
      const std::size_t rank = rank_for_trial(shape.side(), trial);
      gen << "gram_psd rank=" << rank;
      generator = gen.str();
      return BlockMatrix(shape, random_psd(shape.side(), rank, sub_seed));
    }
  }
}

void run_block_suite(Suite suite, const SuiteConfig& config, SuiteRecorder& rec) {
  const BlockSuiteInfo info = block_suite_info(suite);
  const double tol = config.tol;
  auto run_one = [&](const BlockMatrix& a, const Sample& sample, bool explicit_input) {
    const Json doc = to_json(a);
    run_guarded(rec, info.check_name, {a.m(), a.n()}, explicit_input, sample, doc,
                [&] { return info.check(a, tol); });
  };

  if (!config.inputs.empty()) {
    for (std::size_t idx = 0; idx < config.inputs.size(); ++idx) {
      const ExplicitInput& in = config.inputs[idx];
      BlockMatrix a(*in.shape, in.mat);
      if (suite == Suite::kBlock2 && a.m() != 2) {
        rec.skip(info.check_name, {a.m(), a.n()});
        continue;
      }
      run_one(a, {idx, 0, in.source}, true);
    }
    return;
  }

  for (std::size_t slot = 0; slot < config.shapes.size(); ++slot) {
    BlockShape shape = config.shapes[slot];
    if (suite == Suite::kBlock2) shape = {2, shape.n};
    for (std::size_t t = 0; t < config.trials; ++t) {
      Sample sample{t, trial_seed(config.seed, suite, slot, t), {}};
      const BlockMatrix a = generate_block_input(suite, shape, t, sample.sub_seed, sample.generator);
      run_one(a, sample, false);
    }
    // PSD but not PPT: these two checks must hold without A^tau >= 0.
    if ((suite == Suite::kTheorem2 || suite == Suite::kCorollary6) && std::min(shape.m, shape.n) >= 2) {
      run_one(max_entangled(shape), {config.trials, 0, "max_entangled"}, false);
    }
  }
}

void run_submatrix_suite(Suite suite, const SuiteConfig& config, SuiteRecorder& rec) {
  const double tol = config.tol;
  const char* check_name = suite == Suite::kThm8_9 ? "trace_submatrix" : "det_submatrix";
  auto run_matrix = [&](const ComplexMatrix& a, const Sample& sample, bool explicit_input) {
    const std::size_t n = a.rows();
    const Json doc = to_json(a);
    for (std::size_t k = 1; k <= n; ++k) {
      const std::vector<IndexSet> subsets = subsets_of_size(n, k);
      for (const IndexSet& alpha : subsets) {
        for (const IndexSet& beta : subsets) {
          if (suite == Suite::kEqlin && alpha == beta) continue;
          run_guarded(
              rec, check_name, {n}, explicit_input, sample, doc,
              [&] {
                return suite == Suite::kThm8_9 ? check_trace_submatrix(a, alpha, beta, tol)
                                               : check_det_submatrix(a, alpha, beta, tol);
              },
              &alpha, &beta);
        }
      }
    }
  };

  if (!config.inputs.empty()) {
    for (std::size_t idx = 0; idx < config.inputs.size(); ++idx) {
      run_matrix(config.inputs[idx].mat, {idx, 0, config.inputs[idx].source}, true);
    }
    return;
  }
  for (std::size_t slot = 0; slot < config.dims.size(); ++slot) {
    const std::size_t n = config.dims[slot];
    for (std::size_t t = 0; t < config.trials; ++t) {
      const std::size_t rank = rank_for_trial(n, t);
      Sample sample{t, trial_seed(config.seed, suite, slot, t), "gram_psd rank=" + std::to_string(rank)};
      run_matrix(random_psd(n, rank, sample.sub_seed), sample, false);
    }
  }
}

void run_choi_suite(const SuiteConfig& config, SuiteRecorder& rec) {
  const double tol = config.tol;
  for (std::size_t n : config.dims) {
    const LinearMap phi = builtin_map(BuiltinMap::kPhi, n);
    const LinearMap psi = builtin_map(BuiltinMap::kPsi, n);
    const Certificate phi_cp = certify_completely_positive(phi, tol);
    const Certificate phi_ccp = certify_completely_copositive(phi, tol);
    const Certificate psi_cp = certify_completely_positive(psi, tol);
    const Certificate psi_ccp = certify_completely_copositive(psi, tol);

    auto base = [&](const char* name, const char* note) {
      CheckReport r;
      r.check_name = name;
      r.tolerance = tol;
      r.shape = {n};
      r.note = note;
      return r;
    };
    const Sample sample{0, 0, "builtin n=" + std::to_string(n)};

    CheckReport phi_report = base("phi_completely_ppt", "Choi and co-Choi matrices of phi are PSD");
    phi_report.passed = phi_cp.certified && phi_ccp.certified;
    phi_report.residual_min_eig = std::min(phi_cp.min_eig, phi_ccp.min_eig);
    rec.record(phi_report, sample, to_json(phi));

    CheckReport psi_report =
        base("psi_copositive_not_positive", "co-Choi of psi is PSD, Choi of psi is not");
    psi_report.passed = psi_ccp.certified && !psi_cp.certified;
    psi_report.residual_min_eig = psi_ccp.min_eig;
    psi_report.scalar_gap = -psi_cp.min_eig;
    rec.record(psi_report, sample, to_json(psi));

    CheckReport dom = base("co_choi_diagonal_dominance", "co-Choi rows of phi and psi are diagonally dominant");
    dom.passed = is_row_diagonally_dominant(co_choi_matrix(phi).mat()) &&
                 is_row_diagonally_dominant(co_choi_matrix(psi).mat());
    rec.record(dom, sample, to_json(co_choi_matrix(psi)));
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json check_report_json(const CheckReport& r) {
  Json residuals = Json::array();
  for (const ResidualCheck& c : r.residuals) {
    residuals.push_back({{"label", c.label}, {"min_eig", c.min_eig}, {"scale", c.scale}, {"passed", c.passed}});
  }
  Json gaps = Json::array();
  for (const ScalarGap& g : r.gaps) {
    gaps.push_back({{"label", g.label}, {"gap", g.gap}, {"scale", g.scale}, {"passed", g.passed}});
  }
  Json doc = Json::object();
  doc["check_name"] = r.check_name;
  doc["passed"] = r.passed;
  doc["residual_min_eig"] = optional_number(r.residual_min_eig);
  doc["scalar_gap"] = optional_number(r.scalar_gap);
  doc["tolerance"] = r.tolerance;
  doc["shape"] = r.shape;
  doc["seed_info"] = r.seed_info;
  doc["note"] = r.note;
  doc["residuals"] = std::move(residuals);
  doc["gaps"] = std::move(gaps);
  return doc;
}

Json counterexample_json(const Counterexample& c) {
  Json doc = Json::object();
  doc["suite"] = c.suite;
  doc["check_name"] = c.check_name;
  doc["trial"] = c.trial;
  doc["sub_seed"] = c.sub_seed;
  doc["generator"] = c.generator;
  doc["alpha"] = c.alpha ? Json(*c.alpha) : Json(nullptr);
  doc["beta"] = c.beta ? Json(*c.beta) : Json(nullptr);
  doc["matrix"] = c.matrix;
  return doc;
}

std::string shape_text(const std::vector<std::size_t>& shape) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
  os << ")";
  return os.str();
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (Suite s : kSuiteOrder) {
    if (suite_name(s) == name) return s;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kTheorem2: return "theorem2";
    case Suite::kCorollary3: return "corollary3";
    case Suite::kCombined: return "combined";
    case Suite::kUpperBound: return "upper_bound";
    case Suite::kCorollary6: return "corollary6";
    case Suite::kBlock2: return "block2";
    case Suite::kThm8_9: return "thm8_9";
    case Suite::kEqlin: return "eqlin";
    case Suite::kChoiCerts: return "choi_certs";
  }
  return "unknown";
}

std::vector<Suite> all_suites() { return {std::begin(kSuiteOrder), std::end(kSuiteOrder)}; }

std::vector<Suite> resolve_suites(const std::vector<std::string>& names) {
  if (names.empty()) throw UsageError("no suite selected");
  std::vector<Suite> out;
  auto add = [&](Suite s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const std::string& name : names) {
    if (name == "all") {
      for (Suite s : kSuiteOrder) add(s);
    } else {
      add(parse_suite(name));
    }
  }
  return out;
}

void validate_config(const SuiteConfig& config) {
  const std::vector<Suite> suites = resolve_suites(config.suites);
  if (config.trials == 0) throw UsageError("trials must be at least 1");
  if (!(config.tol > 0.0)) throw UsageError("tol must be positive");
  const bool need_shapes = std::any_of(suites.begin(), suites.end(), uses_shapes);
  const bool need_dims = std::any_of(suites.begin(), suites.end(), uses_dims);
  if (config.inputs.empty()) {
    if (need_shapes && config.shapes.empty()) throw UsageError("selected suites need at least one shape");
    if (need_dims && config.dims.empty()) throw UsageError("selected suites need at least one dim");
  }
  for (const BlockShape& s : config.shapes) {
    if (s.m == 0 || s.n == 0) throw UsageError("shape dimensions must be positive");
  }
  for (std::size_t d : config.dims) {
    if (d == 0) throw UsageError("dims must be positive");
  }
  for (const ExplicitInput& in : config.inputs) {
    if (!in.mat.is_square() || in.mat.rows() == 0) {
      throw UsageError("input '" + in.source + "' is not a nonempty square matrix");
    }
    const bool block_suite_selected =
        std::any_of(suites.begin(), suites.end(), [](Suite s) { return uses_shapes(s); });
    if (block_suite_selected && !in.shape) {
      throw UsageError("input '" + in.source + "' has no block shape (m, n) but a block suite is selected");
    }
  }
}

std::uint64_t trial_seed(std::uint64_t seed, Suite suite, std::size_t slot, std::size_t trial) {
  const auto suite_index = static_cast<std::uint64_t>(suite) + 1;
  return derive_seed(derive_seed(derive_seed(seed, suite_index), slot), trial);
}

RunReport run_suite(const SuiteConfig& config) {
  validate_config(config);
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.config = config;
  for (Suite suite : resolve_suites(config.suites)) {
    SuiteRecorder rec(suite);
    if (suite == Suite::kChoiCerts) {
      run_choi_suite(config, rec);
    } else if (uses_dims(suite)) {
      run_submatrix_suite(suite, config, rec);
    } else {
      run_block_suite(suite, config, rec);
    }
    report.suites.push_back(rec.take());
  }
  report.summary.suites = report.suites.size();
  for (const SuiteResult& s : report.suites) {
    for (const CheckAggregate& agg : s.aggregates) {
      report.summary.checks += agg.checks;
      report.summary.skipped += agg.skipped;
    }
    report.summary.failures += s.failures.size();
  }
  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_to_json(const RunReport& report) {
  const SuiteConfig& cfg = report.config;
  Json config = Json::object();
  Json suite_names = Json::array();
  for (Suite s : resolve_suites(cfg.suites)) suite_names.push_back(suite_name(s));
  config["suites"] = std::move(suite_names);
  config["trials"] = cfg.trials;
  Json shapes = Json::array();
  for (const BlockShape& s : cfg.shapes) shapes.push_back(Json::array({s.m, s.n}));
  config["shapes"] = std::move(shapes);
  config["dims"] = cfg.dims;
  config["seed"] = cfg.seed;
  config["tol"] = cfg.tol;
  Json inputs = Json::array();
  for (const ExplicitInput& in : cfg.inputs) inputs.push_back(in.source);
  config["inputs"] = std::move(inputs);

  Json suites = Json::array();
  for (const SuiteResult& s : report.suites) {
    Json aggregates = Json::array();
    std::size_t checks = 0;
    for (const CheckAggregate& a : s.aggregates) {
      checks += a.checks;
      Json doc = Json::object();
      doc["check_name"] = a.check_name;
      doc["shape"] = a.shape;
      doc["checks"] = a.checks;
      doc["failures"] = a.failures;
      doc["skipped"] = a.skipped;
      doc["worst_residual_min_eig"] = optional_number(a.worst_residual_min_eig);
      doc["worst_scalar_gap"] = optional_number(a.worst_scalar_gap);
      doc["worst_relative_margin"] = optional_number(a.worst_relative_margin);
      aggregates.push_back(std::move(doc));
    }
    Json failures = Json::array();
    for (std::size_t i = 0; i < s.failures.size(); ++i) {
      Json doc = check_report_json(s.failures[i]);
      doc["counterexample"] = counterexample_json(s.counterexamples[i]);
      failures.push_back(std::move(doc));
    }
    Json doc = Json::object();
    doc["name"] = suite_name(s.suite);
    doc["checks"] = checks;
    doc["failure_count"] = s.failures.size();
    doc["aggregates"] = std::move(aggregates);
    doc["failures"] = std::move(failures);
    suites.push_back(std::move(doc));
  }

  Json summary = Json::object();
  summary["suites"] = report.summary.suites;
  summary["checks"] = report.summary.checks;
  summary["failures"] = report.summary.failures;
  summary["skipped"] = report.summary.skipped;
  summary["passed"] = report.all_passed();

  Json doc = Json::object();
  doc["config"] = std::move(config);
  doc["suites"] = std::move(suites);
  doc["summary"] = std::move(summary);
  doc["duration_seconds"] = report.duration_seconds;
  return doc;
}

std::string report_to_text(const RunReport& report) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "seed " << report.config.seed << "  trials " << report.config.trials << "  tol " << report.config.tol
     << "\n";
  for (const SuiteResult& s : report.suites) {
    for (const CheckAggregate& a : s.aggregates) {
      os << (a.failures == 0 ? "PASS " : "FAIL ") << std::left << std::setw(12) << suite_name(s.suite)
         << std::setw(30) << a.check_name << std::setw(8) << shape_text(a.shape) << " checks " << a.checks
         << "  failures " << a.failures;
      if (a.skipped) os << "  skipped " << a.skipped;
      if (a.worst_relative_margin) os << "  worst_margin " << *a.worst_relative_margin;
      os << std::right << "\n";
    }
    for (const CheckReport& f : s.failures) {
      os << "  counterexample " << f.check_name << " " << f.seed_info;
      if (!f.note.empty()) os << " (" << f.note << ")";
      os << "\n";
    }
  }
  os << "summary: " << report.summary.checks << " checks, " << report.summary.failures << " failures";
  if (report.summary.skipped) os << ", " << report.summary.skipped << " skipped";
  os << "  (" << std::fixed << std::setprecision(2) << report.duration_seconds << " s)\n";
  return os.str();
}

}  // namespace cocopos
