#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sbc/cli.hpp"
#include "sbc/rule_table.hpp"

using namespace sbc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SBC_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "sbc_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("check") {
  auto r = run({"check", data("counterex.sbc"), "--regressive"});
  CHECK(r.code == 0);
  CHECK(r.out == "regressive: true\n");

  r = run({"check", data("counterex.sbc"), "--progressive"});
  CHECK(r.code == 1);
  CHECK(r.out == "progressive: false (d(00)=d(01)=0)\n");

  r = run({"check", data("wpnotr.sbc"), "--weak-order", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "weakly_progressive(2): true\n");

  r = run({"check", data("counterex.sbc"), "--weak-order", "1"});
  CHECK(r.code == 1);
  CHECK(r.out == "weakly_progressive(1): false (mu=00 nu=0 admissible {0,1})\n");

  r = run({"check", data("shift2.sbc"), "--star-commutes", "--oracle-depth", "4"});
  CHECK(r.code == 1);
  CHECK(r.out == "star_commutes: false\nstar_commutes_oracle(4): false\n");

  r = run({"check", data("constant.sbc"), "--injective"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("cylinder_injective: false (Z() holds ", 0) == 0);

  r = run({"check", data("counterex.sbc"), "--injective"});
  CHECK(r.code == 0);
}

TEST_CASE("check needs exactly one property") {
  auto r = run({"check", data("counterex.sbc")});
  CHECK(r.code == 2);
  r = run({"check", data("counterex.sbc"), "--progressive", "--regressive"});
  CHECK(r.code == 2);
  CHECK(r.err.find('\n') == r.err.size() - 1);
}

TEST_CASE("apply and preimages") {
  auto r = run({"apply", data("shift4.sbc"), "0123"});
  CHECK(r.code == 0);
  CHECK(r.out == "123\n");

  r = run({"apply", data("counterex.sbc"), "0213"});
  CHECK(r.out == "122\n");

  r = run({"apply", data("counterex.sbc"), "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("WordTooShort") != std::string::npos);

  r = run({"preimages", data("counterex.sbc"), "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "00\n01\n32\n33\ncount: 4\n");

  r = run({"preimages", data("counterex.sbc"), "0", "--limit", "1"});
  CHECK(r.out == "00\ncount: 1\n");
}

TEST_CASE("analyze prints one key: value line per field") {
  const auto r = run({"analyze", data("counterex.sbc")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "minimal_window: 2\n"
        "progressive: false (d(00)=d(01)=0)\n"
        "regressive: true\n"
        "weak_order: 2 (searched m <= 6)\n"
        "star_commutes: true (oracle depth 5 agrees)\n"
        "cylinder_injective: true\n"
        "local_homeo: proven (weakly progressive of order 2)\n"
        "covering_degree: 2 (counts 0:2 1:2 2:2 3:2)\n");

  const auto constant = run({"analyze", data("constant.sbc"), "--max-weak-order", "3"});
  CHECK(constant.out.find("weak_order: none (searched m <= 3)\n") != std::string::npos);
  CHECK(constant.out.find("local_homeo: refuted (") != std::string::npos);
  CHECK(constant.out.find("covering_degree: none (requires a weak order)\n") != std::string::npos);

  const auto depth_error = run({"analyze", data("counterex.sbc"), "--oracle-depth", "1"});
  CHECK(depth_error.code == 2);
  CHECK(depth_error.err.find("DepthTooSmall") != std::string::npos);
}

TEST_CASE("reduce and compose") {
  const auto middle = scratch("middle.sbc");
  write(middle, "alphabet 2\nwindow 3\n000 0\n001 0\n010 1\n011 1\n100 0\n101 0\n110 1\n111 1\n");
  auto r = run({"reduce", middle.string()});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("shift2.sbc")).substr(slurp(data("shift2.sbc")).find("alphabet")));

  const auto reduced = scratch("reduced.sbc");
  r = run({"reduce", middle.string(), "-o", reduced.string()});
  CHECK(r.out == "minimal_window: 2\n");
  CHECK(parse_block_map(slurp(reduced)).window() == 2);

  const auto composed = scratch("composed.sbc");
  r = run({"compose", data("shift2.sbc"), data("shift2.sbc"), "-o", composed.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "window: 3\n");
  r = run({"apply", composed.string(), "01101"});
  CHECK(r.out == "101\n");

  r = run({"compose", data("shift2.sbc"), data("counterex.sbc"), "-o", composed.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("AlphabetMismatch") != std::string::npos);
}

TEST_CASE("derive") {
  const auto out = scratch("derived.sbc");
  auto r = run({"derive", data("flip_fixed_points.samples"), "-o", out.string()});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("inconsistent: no block map of window <= 4 fits the samples\n", 0) == 0);
  CHECK(r.out.find("window 4: d(0000) forced to 1 by sample 1 position 1 and to 0 by sample 2 position 1") !=
        std::string::npos);

  const auto samples = scratch("shift.samples");
  write(samples,
        "alphabet 2\n000 -> 00\n001 -> 01\n010 -> 10\n011 -> 11\n100 -> 00\n101 -> 01\n110 -> 10\n111 -> 11\n");
  r = run({"derive", samples.string(), "-o", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "window: 2\n");
  CHECK(slurp(out) == slurp(data("shift2.sbc")).substr(slurp(data("shift2.sbc")).find("alphabet")));

  r = run({"check", data("shift2.sbc"), "--samples", samples.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "consistent: true\n");

  write(samples, "alphabet 2\n010 -> 0\n");
  r = run({"check", data("shift2.sbc"), "--samples", samples.string()});
  CHECK(r.code == 1);
  CHECK(r.out == "consistent: false (sample 1 position 1: expected 0, got 1)\n");

  write(samples, "alphabet 2\n01 -> 1\n");
  r = run({"derive", samples.string(), "-o", out.string(), "--max-window", "2"});
  CHECK(r.code == 1);
  CHECK(r.out == "underdetermined: window 1 leaves 1 rows unconstrained: 1\n");
}

TEST_CASE("search") {
  auto r = run({"search", "--alphabet", "2", "--window", "2", "--regressive", "yes", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "count: 4\n");

  r = run({"search", "--alphabet", "2", "--window", "1", "--progressive", "yes"});
  CHECK(r.out == "alphabet 2\nwindow 1\n0 0\n1 1\n---\nalphabet 2\nwindow 1\n0 1\n1 0\n");

  r = run({"search", "--alphabet", "3", "--window", "3", "--count-only"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SpaceTooLarge") != std::string::npos);

  r = run({"search", "--alphabet", "2", "--window", "2", "--progressive", "maybe"});
  CHECK(r.code == 2);
}

TEST_CASE("format errors name file, line and cause") {
  const auto bad = scratch("bad.sbc");
  write(bad, "alphabet 2\nwindow 1\n0 1\n0 0\n");
  auto r = run({"analyze", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err == "error: " + bad.string() + ":4: DuplicateRule: rule for 0 already given on line 3\n");

  write(bad, "alphabet 4\nwindow 2\n00 0\n");
  r = run({"analyze", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("IncompleteTable") != std::string::npos);

  r = run({"analyze", "/nonexistent/file.sbc"});
  CHECK(r.code == 2);
  CHECK(r.err == "error: /nonexistent/file.sbc: InvalidArgument: cannot open file\n");

  r = run({});
  CHECK(r.code == 2);
  r = run({"frobnicate"});
  CHECK(r.code == 2);
  r = run({"--help"});
  CHECK(r.code == 0);
}
