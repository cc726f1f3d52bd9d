#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cocopos/matrix_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cocopos");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cocopos::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "cocopos_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"verify", "--trials", "0"}).code == 2);
  CHECK(invoke({"verify", "--suite", "nope"}).code == 2);
  CHECK(invoke({"verify", "--shapes", "2y2"}).code == 2);
  CHECK(invoke({"verify", "--format", "xml"}).code == 2);
  CHECK(invoke({"choi", "--map", "nope"}).code == 2);
  CHECK(invoke({"gen", "--kind", "nope"}).code == 2);
  CHECK(invoke({"verify", "/nonexistent/file.json"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verify exits 0 on a small run") {
  const Outcome o = invoke({"verify", "--trials", "1", "--shapes", "2x2", "--dims", "3", "--format", "json"});
  CHECK(o.code == 0);
  const cocopos::Json doc = cocopos::parse_document(o.out);
  CHECK(doc["summary"]["failures"] == 0);
}

TEST_CASE("choi prints the psi spectra") {
  const Outcome o = invoke({"choi", "--map", "psi", "--n", "2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("spectrum: -1 1 1 1") != std::string::npos);
  CHECK(o.out.find("spectrum: 0 0 0 2") != std::string::npos);
  CHECK(o.out.find("completely positive:   no") != std::string::npos);
  CHECK(o.out.find("completely copositive: yes") != std::string::npos);

  const Outcome j = invoke({"choi", "--map", "phi", "--n", "3", "--format", "json"});
  CHECK(j.code == 0);
  const cocopos::Json doc = cocopos::parse_document(j.out);
  CHECK(doc["completely_ppt"] == true);
  CHECK(doc["co_choi_diagonally_dominant"] == true);
}

TEST_CASE("gen output feeds verify") {
  const fs::path dir = scratch_dir();
  const std::string file = (dir / "sep.json").string();
  CHECK(invoke({"gen", "--kind", "separable", "--m", "2", "--n", "3", "--rank", "2", "--seed", "7", "--out", file})
            .code == 0);
  const cocopos::BlockMatrix a = cocopos::parse_block_matrix(cocopos::read_text_file(file));
  CHECK(a.shape().m == 2);
  CHECK(a.shape().n == 3);

  const Outcome o = invoke({"verify", "--suite", "theorem2,corollary3,combined,upper_bound,corollary6", file});
  CHECK(o.code == 0);
  CHECK(o.out.find("PASS") != std::string::npos);

  const std::string report = (dir / "report.json").string();
  CHECK(invoke({"verify", "--suite", "thm8_9", "--format", "json", "--out", report, file}).code == 0);
  CHECK(fs::exists(report));
  CHECK_FALSE(fs::exists(report + ".cex-0.json"));
}

TEST_CASE("identical runs produce identical JSON") {
  const std::vector<std::string> args{"verify", "--trials", "2", "--shapes", "2x2,2x3", "--dims", "4",
                                      "--seed", "9", "--format", "json"};
  cocopos::Json a = cocopos::parse_document(invoke(args).out);
  cocopos::Json b = cocopos::parse_document(invoke(args).out);
  a.erase("duration_seconds");
  b.erase("duration_seconds");
  CHECK(a.dump() == b.dump());
}
