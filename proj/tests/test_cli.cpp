#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "plancalc/tangle.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = plancalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(PLANCALC_FIXTURES) + "/" + name; }

std::string tmp(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "plancalc_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string code_of(const std::string& path) { return json::parse(run({"canon", path}).out).at("code"); }

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run({"validate", fx("identity2p.json")}).code == 0);
  const Result bad = run({"validate", fx("crossing.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("plancalc: invalid-tangle: non-planarity", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
  CHECK(run({"validate", fx("malformed.json")}).code == 5);
  CHECK(run({"validate", fx("badschema.json")}).code == 5);
  CHECK(run({"validate", fx("wrongformat.json")}).code == 5);
  CHECK(run({"validate", fx("no_such_file.json")}).code == 4);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("composing with the identity keeps the canonical code") {
  const std::string out = tmp("composed.json");
  REQUIRE(run({"compose", "--at", "1", fx("id.json"), fx("t.json"), "-o", out}).code == 0);
  CHECK(code_of(out) == code_of(fx("t.json")));
}

TEST_CASE("write and reread round trip") {
  for (const char* name : {"mult2p.json", "jones2p.json", "loop_in_mult.json", "s3_2p.json", "raise_2m_1p_l1.json"}) {
    const std::string a = tmp("star1.json"), b = tmp("star2.json");
    REQUIRE(run({"star", fx(name), "-o", a}).code == 0);
    REQUIRE(run({"star", a, "-o", b}).code == 0);
    CHECK(code_of(b) == code_of(fx(name)));
    CHECK(json::parse(slurp(a)).at("format") == "plancalc/1");
  }
}

TEST_CASE("svg output is order-canonical") {
  // The same tangle with its strings listed in another order and direction.
  plancalc::RawTangle raw = plancalc::raw_from_json(slurp(fx("mult2p.json")));
  std::reverse(raw.strings.begin(), raw.strings.end());
  for (auto& s : raw.strings) std::swap(s.first, s.second);
  const std::string shuffled = tmp("mult_shuffled.json");
  std::ofstream(shuffled) << plancalc::raw_to_json(raw);
  const Result a = run({"render", fx("mult2p.json")}), b = run({"render", shuffled});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run({"render", fx("mult2p.json")}).out);
  CHECK(a.out.find("<svg") != std::string::npos);
}

TEST_CASE("depth of the sqrt2 quotient") {
  const Result r = run({"depth", "--instance", "tl-quotient", "--delta", "sqrt2", "--max-k", "6"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("format") == "plancalc/1");
  CHECK(j.at("l_plus") == 2);
  CHECK(j.at("l_minus") == 2);
}

TEST_CASE("thread cap does not change results") {
  const std::vector<std::string> args{"depth", "--instance", "tl-quotient", "--delta", "sqrt2", "--max-k", "4"};
  const std::string free_run = run(args).out;
  setenv("PLANCALC_THREADS", "1", 1);
  const std::string capped = run(args).out;
  unsetenv("PLANCALC_THREADS");
  CHECK(free_run == capped);
}

TEST_CASE("pivotal evaluation of the multiplication tangle is a matrix product") {
  const Result r = run({"pivotal", "eval", fx("mult2p.json"), "--model", fx("model2.json"), "--labels",
                        fx("labels_mult2p.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json labels = json::parse(slurp(fx("labels_mult2p.json"))).at("labels");
  // Disc 2 sits on top: result = L2 * L1.
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      long long v = 0;
      for (int m = 0; m < 4; ++m) v += labels[1][i * 4 + m].get<long long>() * labels[0][m * 4 + k].get<long long>();
      CHECK(j.at("matrix")[i * 4 + k] == std::to_string(v));
    }
  CHECK(run({"pivotal", "eval", fx("mult2p.json"), "--model", fx("model_singular.json")}).code == 7);
}

TEST_CASE("TL commands") {
  const json q = json::parse(run({"tl", "quotient", "--color", "4+", "--delta", "sqrt2"}).out);
  CHECK(q.at("dimension") == 8);
  CHECK(q.at("positive_definite") == true);
  const json g = json::parse(run({"tl", "gram", "--color", "2+", "--delta", "generic"}).out);
  CHECK(g.at("gram")[0][0] == "dp^2");
}

TEST_CASE("affine hom table and stability") {
  const Result csv = run({"affine", "hom", "--truncation", "4", "--kmax", "1"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("outer,inner,truncation,dim,stable,levels\n", 0) == 0);
  const json h = json::parse(run({"affine", "hom", "--truncation", "8", "--outer", "1+", "--inner", "1+"}).out);
  CHECK(h.at("dim") == 4);
  CHECK(h.at("stable") == true);
  CHECK(run({"affine", "hom", "--truncation", "0", "--outer", "1+", "--inner", "1+", "--require-stable"}).code == 3);
  CHECK(run({"affine", "hom", "--outer", "1+", "--inner", "1+"}).code == 1);
}

TEST_CASE("affine irreps report carries truncation metadata") {
  const json j = json::parse(run({"affine", "irreps", "--truncation", "8", "--color", "0+"}).out);
  CHECK(j.at("format") == "plancalc/1");
  CHECK(j.at("truncation") == 8);
  CHECK(j.at("blocks") == json::array({1, 1}));
  CHECK(j.at("stable") == true);
}
