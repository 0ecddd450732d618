#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "cnotpac/cli/cli.hpp"

using namespace cnotpac;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cnotpac_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = (path / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("reduce, solve and verify") {
    TempDir d;
    const auto cnf = d.file("unit.cnf", "c x1\np cnf 1 1\n1 0\n");
    const auto r1 = d.file("r1.json"), r2 = d.file("r2.json"), circ = d.file("c.json");
    REQUIRE(run({"reduce", "--cnf", cnf, "--seed", "7", "--out", r1}).code == 0);
    REQUIRE(run({"reduce", "--cnf", cnf, "--seed", "7", "--out", r2}).code == 0);
    CHECK(slurp(r1) == slurp(r2));
    const auto j = io::parse_json_text(slurp(r1));
    CHECK(j["instance"]["size"] == 3);
    CHECK(j["samples"]["samples"].size() <= 12);

    CHECK(run({"solve", "--samples", r1, "--out", circ}).code == 0);
    CHECK(run({"verify", "--circuit", circ, "--samples", r1}).code == 0);
    CHECK(run({"solve", "--samples", r1, "--strategy", "decision"}).code == 0);
    const auto aff = run({"solve", "--instance", r1, "--strategy", "affine"});
    CHECK(aff.code == 0);
    CHECK(aff.out.find("\"assignment\": \"1\"") != std::string::npos);

    // The identity is not consistent: the pinned column is not e_c.
    const auto ident = d.file("id.json", R"({"n": 3, "gates": []})");
    const auto v = run({"verify", "--circuit", ident, "--samples", r1});
    CHECK(v.code == 1);
    CHECK(v.out.find("first violated sample:") != std::string::npos);
  }

  TEST_CASE("unsatisfiable input") {
    TempDir d;
    const auto r = d.file("r.json");
    REQUIRE(run({"reduce", "--formula", "x1+x1", "--seed", "1", "--out", r}).code == 0);
    CHECK(run({"solve", "--samples", r}).code == 1);
    CHECK(run({"solve", "--instance", r, "--strategy", "affine"}).code == 1);
    CHECK(run({"learn", "pac", "--samples", r, "--seed", "2"}).code == 1);
  }

  TEST_CASE("error exits") {
    TempDir d;
    const auto bad = d.file("bad.cnf", "p cnf one 1\n1 0\n");
    const auto e = run({"reduce", "--cnf", bad, "--seed", "1"});
    CHECK(e.code == 2);
    CHECK(e.err.find("line 1") != std::string::npos);
    CHECK(run({"reduce", "--cnf", d.file("long.cnf", "p cnf 4 1\n1 2 3 4 0\n"), "--seed", "1"}).code == 2);
    CHECK(run({"reduce", "--formula", "x1"}).code == 2);  // seed is mandatory
    CHECK(run({"reduce", "--seed", "1"}).code == 2);
    CHECK(run({"solve", "--samples", d.file("missing.json")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"complexity", "--epsilon", "0"}).code == 2);
    CHECK(run({"complexity", "--alpha", "0.5", "--beta", "0.5"}).code == 2);

    const auto big = d.file("big.json", R"({"n": 20, "samples": []})");
    const auto lim = run({"solve", "--samples", big});
    CHECK(lim.code == 2);
    CHECK(lim.err.find("enumeration limit") != std::string::npos);

    const auto nonsymp = d.file("ns.json", R"({"n": 1, "gates": [], "tableau": {"matrix": ["10", "00"], "phases": "00"}})");
    const auto s = d.file("s.json", R"({"n": 1, "samples": []})");
    const auto ns = run({"verify", "--circuit", nonsymp, "--samples", s});
    CHECK(ns.code == 2);
    CHECK(ns.err.find("symplectic") != std::string::npos);
  }

  TEST_CASE("learn modes and reports") {
    TempDir d;
    const auto rep = d.file("rep.json");
    const auto t = run({"--report", rep, "learn", "trivial", "--n", "4", "--seed", "5"});
    CHECK(t.code == 0);
    const auto tj = io::parse_json_text(t.out);
    CHECK(tj["tableau"]["matrix"].size() == 8);
    const auto rj = io::parse_json_text(slurp(rep));
    CHECK(rj["command"] == "learn trivial");
    CHECK(rj["seed"] == 5);
    const std::string digest = rj["digest"];
    REQUIRE(run({"--report", rep, "learn", "trivial", "--n", "4", "--seed", "5"}).code == 0);
    CHECK(io::parse_json_text(slurp(rep))["digest"] == digest);

    const auto batch = d.file("b.json", R"({"n": 2, "samples": [
      {"state": [{"n": 2, "sign": "+", "x": "00", "z": "10"}, {"n": 2, "sign": "+", "x": "00", "z": "01"}],
       "measurement": {"n": 2, "sign": "+", "x": "00", "z": "10"}, "label": "0"}]})");
    const auto sm = run({"learn", "single-measurement", "--samples", batch, "--seed", "1", "--out", d.file("h.json")});
    CHECK(sm.code == 0);
    CHECK(run({"verify", "--circuit", d.file("h.json"), "--samples", batch}).code == 0);

    const auto contra = d.file("x.json", R"({"n": 1, "samples": [
      {"state": [{"n": 1, "sign": "+", "x": "0", "z": "1"}], "measurement": {"n": 1, "sign": "+", "x": "0", "z": "1"}, "label": "0"},
      {"state": [{"n": 1, "sign": "+", "x": "0", "z": "1"}], "measurement": {"n": 1, "sign": "+", "x": "0", "z": "1"}, "label": "1"}]})");
    CHECK(run({"learn", "single-measurement", "--samples", contra, "--seed", "1"}).code == 1);
    CHECK(run({"learn", "pac", "--samples", batch, "--seed", "1", "--decide"}).code == 0);
  }

  TEST_CASE("complexity and bench") {
    const auto c = run({"complexity"});
    CHECK(c.code == 0);
    CHECK(c.out.find("m = 595911951.65256") != std::string::npos);
    CHECK(c.out.find("set to 1") != std::string::npos);
    const auto b = run({"bench", "--n", "3", "--trials", "2", "--seed", "4"});
    CHECK(b.code == 0);
    CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 2);
  }
}
