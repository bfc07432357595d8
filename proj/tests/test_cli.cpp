#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "thhmay/cli.hpp"
#include "thhmay/io.hpp"
#include "thhmay/selftest.hpp"

using namespace thhmay;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "thhmay");
  std::ostringstream out, err;
  int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kExterior = THHMAY_DATA_DIR "/exterior3.json";
const std::string kX4 = THHMAY_DATA_DIR "/x4weights.json";

// "n<TAB>dim" rows following the totals header.
std::map<int, int> totals_section(const std::string& tsv) {
  std::map<int, int> out;
  std::istringstream in(tsv);
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line == "n\tdim") {
      inside = true;
      continue;
    }
    if (!inside) continue;
    std::istringstream row(line);
    int n, d;
    row >> n >> d;
    out[n] = d;
  }
  return out;
}

}  // namespace

TEST_CASE("hh on the exterior example") {
  auto r = run_cli({"hh", "--algebra", kExterior, "--space", "circle", "--max-internal", "12", "--max-level", "6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# exact:", 0) == 0);
  auto tot = totals_section(r.out);
  std::set<int> ones{0, 3, 4, 7, 8, 11, 12};
  for (int n = 0; n <= 12; ++n) CHECK_MESSAGE(tot.at(n) == (ones.count(n) ? 1 : 0), "n=" << n);

  auto j = run_cli({"hh", "--algebra", kExterior, "--max-internal", "12", "--max-level", "6", "--format", "json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  for (const auto& e : doc["totals"]) CHECK(e["dim"] == (ones.count(e["n"].get<int>()) ? 1 : 0));
  CHECK(doc["validity"]["exact_level"] == 4);
}

TEST_CASE("check-fundamental") {
  auto r = run_cli({"check-fundamental", "--algebra", kX4, "--space", "circle", "--max-level", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result\tpass") != std::string::npos);
  auto m = run_cli({"check-fundamental", "--algebra", kExterior, "--module", THHMAY_DATA_DIR "/exterior3_ideal.json",
                    "--max-level", "4", "--max-internal", "8"});
  CHECK(m.code == 0);
}

TEST_CASE("poincare") {
  // coefficients of (1+t^5)^2 / ((1-t^4)(1-t^6)), counted by hand from the
  // monomials 1, x, λ, σx, μ, x^2, xλ, xσx, λσx, xμ
  auto r = run_cli({"poincare", "--p", "3", "--n", "2", "--N", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,0,0,0,1,2,1,0,1,2,2\n");
}

TEST_CASE("gr output re-parses to the associated graded algebra") {
  auto r = run_cli({"gr", "--algebra", kX4});
  REQUIRE(r.code == 0);
  CHECK(algebra_from_json(nlohmann::json::parse(r.out)) == associated_graded(corpus_x4_weights()));
}

TEST_CASE("other commands succeed") {
  CHECK(run_cli({"bound", "--algebra", kX4, "--max-level", "5", "--max-internal", "10"}).code == 0);
  CHECK(run_cli({"vanishing", "--p", "5", "--n", "3"}).code == 0);
  CHECK(run_cli({"vanishing", "--p", "3", "--n", "3", "--format", "json"}).code == 0);
  CHECK(run_cli({"poset-check"}).code == 0);
  auto pages = run_cli({"pages", "--algebra", kX4, "--max-level", "5", "--max-internal", "10", "--r-max", "2"});
  CHECK(pages.code == 0);
  CHECK(pages.out.find("d\t1\t8\t3\t1") != std::string::npos);
  auto st = run_cli({"selftest", "--trials", "3", "--seed", "9"});
  CHECK(st.code == 0);
  CHECK(st.out.find("result\tpass") != std::string::npos);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("space files and named spaces agree") {
  auto path = std::filesystem::temp_directory_path() / "thhmay_circle_test.json";
  {
    std::ofstream f(path);
    f << to_json(circle(5)).dump();
  }
  auto a = run_cli({"hh", "--algebra", kExterior, "--space", path.string(), "--max-level", "5", "--max-internal", "9"});
  auto b = run_cli({"hh", "--algebra", kExterior, "--space", "circle", "--max-level", "5", "--max-internal", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto t = run_cli({"hh", "--algebra", kExterior, "--space", "torus:2", "--max-level", "3", "--max-internal", "6"});
  CHECK(t.code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("invalid input exits with 2") {
  const std::vector<std::vector<std::string>> bad{
      {"hh", "--algebra", kExterior, "--max-level", "1"},
      {"hh", "--algebra", kExterior, "--max-internal", "-1"},
      {"hh", "--algebra", kExterior, "--space", "torus:0"},
      {"hh", "--algebra", kExterior, "--space", "klein"},
      {"hh", "--algebra", "/nonexistent.json"},
      {"hh"},
      {"frobnicate"},
      {"hh", "--algebra", kExterior, "--format", "xml"},
      {"hh", "--algebra", kExterior, "--max-level", "many"},
      {"vanishing", "--p", "4", "--n", "2"},
      {"poincare", "--N", "-3"},
      {},
  };
  for (const auto& args : bad) {
    auto r = run_cli(args);
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(r.out.empty());
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"pages", "--algebra", kX4, "--max-level", "5", "--max-internal", "10", "--format", "json"},
      {"selftest", "--trials", "4", "--seed", "3"},
      {"poset-check", "--seed", "17"},
      {"hh", "--algebra", kX4, "--space", "torus:2", "--max-level", "3", "--max-internal", "6"},
  };
  for (const auto& c : cmds) {
    auto a = run_cli(c), b = run_cli(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
