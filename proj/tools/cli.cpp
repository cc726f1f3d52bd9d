#include "cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cocopos/errors.hpp"
#include "cocopos/maps.hpp"
#include "cocopos/matrix_io.hpp"
#include "cocopos/randgen.hpp"
#include "cocopos/suite.hpp"

namespace cocopos::cli {

namespace {

// "2x3" or "2,3" -> (2, 3).
BlockShape parse_shape(const std::string& text) {
  const auto sep = text.find_first_of("x,");
  if (sep == std::string::npos) throw UsageError("shape '" + text + "' is not of the form MxN");
  try {
    std::size_t used_m = 0;
    std::size_t used_n = 0;
    const std::string m_text = text.substr(0, sep);
    const std::string n_text = text.substr(sep + 1);
    const unsigned long m = std::stoul(m_text, &used_m);
    const unsigned long n = std::stoul(n_text, &used_n);
    if (used_m != m_text.size() || used_n != n_text.size() || m == 0 || n == 0) throw std::invalid_argument("");
    return {m, n};
  } catch (const std::logic_error&) {
    throw UsageError("shape '" + text + "' is not of the form MxN with positive M, N");
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
}

// Writes one replayable matrix document per counterexample next to the
// report: <out>.cex-<k>.json.
void write_counterexamples(const RunReport& report, const std::string& out_path) {
  if (out_path.empty()) return;
  std::size_t k = 0;
  for (const SuiteResult& s : report.suites) {
    for (const Counterexample& c : s.counterexamples) {
      write_text_file(out_path + ".cex-" + std::to_string(k++) + ".json", c.matrix.dump() + "\n");
    }
  }
}

ExplicitInput load_input(const std::string& path) {
  const Json doc = parse_document(read_text_file(path));
  ExplicitInput in;
  in.source = path;
  if (doc.is_object() && doc.contains("m")) {
    BlockMatrix a = block_matrix_from_json(doc);
    in.shape = a.shape();
    in.mat = a.mat();
  } else {
    in.mat = matrix_from_json(doc);
  }
  return in;
}

struct VerifyOptions {
  std::vector<std::string> suites{"all"};
  std::size_t trials = 1000;
  std::vector<std::string> shapes{"2x2", "2x3", "3x2", "3x3"};
  std::vector<std::size_t> dims{4, 5};
  std::uint64_t seed = 42;
  double tol = kDefaultTolerance;
  std::string format = "text";
  std::string out;
  std::vector<std::string> files;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  SuiteConfig config;
  config.suites = opt.suites;
  config.trials = opt.trials;
  config.shapes.clear();
  for (const std::string& s : opt.shapes) config.shapes.push_back(parse_shape(s));
  config.dims = opt.dims;
  config.seed = opt.seed;
  config.tol = opt.tol;
  config.format = opt.format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  for (const std::string& f : opt.files) config.inputs.push_back(load_input(f));

  const RunReport report = run_suite(config);
  const std::string text =
      config.format == OutputFormat::kJson ? report_to_json(report).dump(2) + "\n" : report_to_text(report);
  emit(text, opt.out, out);
  write_counterexamples(report, opt.out);
  return report.all_passed() ? kAllPassed : kCheckFailed;
}

struct ChoiOptions {
  std::string map = "psi";
  std::string map_file;
  std::size_t n = 2;
  double tol = kDefaultTolerance;
  std::string format = "text";
  std::string out;
};

void print_matrix(std::ostream& os, const ComplexMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Complex z = x(i, j);
      os << (j ? " " : "  ");
      if (z.imag() == 0.0) {
        os << z.real();
      } else {
        os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
      }
    }
    os << "\n";
  }
}

void print_spectrum(std::ostream& os, const ComplexMatrix& x) {
  os << "  spectrum:";
  for (double v : hermitian_eigenvalues(x).values) os << " " << (std::abs(v) < 1e-12 ? 0.0 : v);
  os << "\n";
}

int run_choi(const ChoiOptions& opt, std::ostream& out) {
  const LinearMap phi = opt.map_file.empty() ? builtin_map(parse_builtin_map(opt.map), opt.n)
                                             : linear_map_from_json(parse_document(read_text_file(opt.map_file)));
  const std::string label = opt.map_file.empty() ? opt.map : opt.map_file;
  const BlockMatrix choi = choi_matrix(phi, phi.n());
  const BlockMatrix co_choi = co_choi_matrix(phi);
  const Certificate cp = certify_completely_positive(phi, opt.tol);
  const Certificate ccp = certify_completely_copositive(phi, opt.tol);

  std::ostringstream os;
  if (opt.format == "json") {
    Json doc = Json::object();
    doc["map"] = label;
    doc["n"] = phi.n();
    doc["k"] = phi.k();
    doc["tol"] = opt.tol;
    doc["choi"] = to_json(choi);
    doc["co_choi"] = to_json(co_choi);
    doc["completely_positive"] = {{"certified", cp.certified}, {"min_eig", cp.min_eig}};
    doc["completely_copositive"] = {{"certified", ccp.certified}, {"min_eig", ccp.min_eig}};
    doc["completely_ppt"] = cp.certified && ccp.certified;
    doc["co_choi_diagonally_dominant"] = is_row_diagonally_dominant(co_choi.mat());
    os << doc.dump(2) << "\n";
  } else {
    os << "map " << label << " : M_" << phi.n() << " -> M_" << phi.k() << "\n";
    os << "Choi matrix [Phi(E_ij)]:\n";
    print_matrix(os, choi.mat());
    print_spectrum(os, choi.mat());
    os << "co-Choi matrix [Phi(E_ji)]:\n";
    print_matrix(os, co_choi.mat());
    print_spectrum(os, co_choi.mat());
    os << "completely positive:   " << (cp.certified ? "yes" : "no") << " (min eig " << cp.min_eig << ")\n";
    os << "completely copositive: " << (ccp.certified ? "yes" : "no") << " (min eig " << ccp.min_eig << ")\n";
    os << "completely PPT:        " << (cp.certified && ccp.certified ? "yes" : "no") << "\n";
  }
  emit(os.str(), opt.out, out);
  return kAllPassed;
}

struct GenOptions {
  std::string kind = "gram_psd";
  std::size_t m = 2;
  std::size_t n = 2;
  std::size_t rank = 1;
  std::uint64_t seed = 42;
  std::string out;
};

int run_gen(const GenOptions& opt, std::ostream& out) {
  GenSpec spec;
  spec.kind = parse_gen_kind(opt.kind);
  spec.m = opt.m;
  spec.n = opt.n;
  spec.rank_or_terms = opt.rank;
  spec.seed = opt.seed;
  if (spec.m == 0 || spec.n == 0) throw UsageError("--m and --n must be positive");
  emit(serialize(generate(spec)) + "\n", opt.out, out);
  return kAllPassed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-matrix partial trace/transpose toolkit and matrix inequality verifier", "cocopos"};
  app.require_subcommand(1);

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the seeded inequality suites");
  verify_cmd->add_option("--suite", verify.suites,
                         "Suites: theorem2 corollary3 combined upper_bound corollary6 block2 thm8_9 eqlin "
                         "choi_certs all")
      ->allow_extra_args(false)
      ->delimiter(',');
  verify_cmd->add_option("--trials", verify.trials, "Random inputs per shape or dim");
  verify_cmd->add_option("--shapes", verify.shapes, "Block shapes MxN, e.g. 2x2,2x3")
      ->allow_extra_args(false)
      ->delimiter(',');
  verify_cmd->add_option("--dims", verify.dims, "Matrix sizes for the submatrix suites")
      ->allow_extra_args(false)
      ->delimiter(',');
  verify_cmd->add_option("--seed", verify.seed, "Master seed");
  verify_cmd->add_option("--tol", verify.tol, "PSD tolerance (relative to max(1, scale))");
  verify_cmd->add_option("--format", verify.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", verify.out, "Write the report here instead of stdout");
  verify_cmd->add_option("files", verify.files, "Matrix documents to check instead of generated inputs");

  ChoiOptions choi;
  CLI::App* choi_cmd = app.add_subcommand("choi", "Print Choi/co-Choi matrices and certify a map");
  choi_cmd->add_option("--map", choi.map, "Builtin map: phi psi identity transpose trace_map");
  choi_cmd->add_option("--map-file", choi.map_file, "Linear map document (overrides --map)");
  choi_cmd->add_option("--n", choi.n, "Domain dimension of the builtin map");
  choi_cmd->add_option("--tol", choi.tol, "PSD tolerance");
  choi_cmd->add_option("--format", choi.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  choi_cmd->add_option("--out", choi.out, "Write output here instead of stdout");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a random matrix of a named class");
  gen_cmd->add_option("--kind", gen.kind, "gram_psd separable ppt_rejection low_rank");
  gen_cmd->add_option("--m", gen.m, "Outer block count");
  gen_cmd->add_option("--n", gen.n, "Inner block size");
  gen_cmd->add_option("--rank", gen.rank, "Rank (low_rank) or number of terms (separable)");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--out", gen.out, "Write the document here instead of stdout");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPassed;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kAllPassed;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify, out);
    if (choi_cmd->parsed()) return run_choi(choi, out);
    return run_gen(gen, out);
  } catch (const ConvergenceError& e) {
    err << "numerical error: " << e.what() << " (off-diagonal residual " << e.offdiag_residual() << ")\n";
    return kNumericalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace cocopos::cli
