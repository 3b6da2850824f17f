#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "padyn/cli.hpp"

using namespace padyn;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "padyn_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  auto r = run({});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"tate", "--curve", "[0,-1,1,0,0]"}).code == 2);  // missing --p
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tate and lseries") {
  auto r = run({"tate", "--curve", "[0,-1,1,0,0]", "--p", "11"});
  REQUIRE(r.code == 0);
  auto j = r.parsed();
  CHECK(j["kind"] == "multiplicative");
  CHECK(j["f"] == 1);
  auto l = run({"lseries", "--curve", "[0,0,1,-1,0]", "--nmax", "10"}).parsed();
  CHECK(l["a"][1] == -2);
  CHECK(l["level"] == 37);
}

TEST_CASE("domain errors exit 1 with the error name") {
  auto r = run({"tate", "--curve", "[0,0,0,0,0]", "--p", "5"});
  CHECK(r.code == 1);
  CHECK(r.parsed()["error"] == "SingularCurve");
  auto q = run({"qparam", "--j", "1728", "--p", "2"});
  CHECK(q.code == 1);
  CHECK(q.parsed()["error"] == "BadReductionRequired");
  CHECK(run({"tate", "--curve", "[0,-1,1,0,0]", "--p", "12"}).code == 2);
}

TEST_CASE("series and curves") {
  auto s = run({"series-from-curve", "--curve", "[1,-1,1,-1,-14]", "--order", "8"}).parsed();
  auto c = run({"curve-from-series", "--series", s["series"].get<std::string>()}).parsed();
  CHECK(c["curve"] == json::parse("[1,-1,1,-1,-14]"));
  auto o = run({"orbit", "--series", "x^3*(1 + x)", "--p", "3", "--seed", "3", "--steps", "2"}).parsed();
  CHECK(o["valuations"] == json::parse("[1,3,9]"));
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"surface-scan", "--e1", "[0,-1,1,0,0]", "--e2", "[0,-1,1,-10,-20]", "--grid", "6", "--window", "6"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = a.parsed();
  CHECK(j["working_prime"] == 11);
  CHECK(j["fibers"].size() == 7);
  auto f = run({"formation", "--coeffs", "1,2,3,4"});
  CHECK(f.out == run({"formation", "--coeffs", "1,2,3,4"}).out);
  CHECK(f.parsed()["p_star"] == 7);
}

TEST_CASE("config file") {
  auto cfg = scratch("run.cfg");
  write(cfg, "# defaults\nn_max = 6\noutput_dir = " + scratch("out").string() + "\n");
  auto l = run({"--config", cfg.string(), "lseries", "--curve", "[0,0,1,-1,0]"}).parsed();
  CHECK(l["a"].size() == 6);
  write(cfg, "bogus = 1\n");
  CHECK(run({"--config", cfg.string(), "lseries", "--curve", "[0,0,1,-1,0]"}).code == 2);
  write(cfg, "prime = 4\n");
  CHECK(run({"--config", cfg.string(), "lseries", "--curve", "[0,0,1,-1,0]"}).code == 2);
}

TEST_CASE("files land in the output directory") {
  auto dir = scratch("render_out");
  std::filesystem::remove_all(dir);
  auto r = run({"--output-dir", dir.string(), "render", "--series", "x^3*(1 + x)", "--p", "3", "--seeds", "3,6",
                "--steps", "2", "--normalized", "--out", "orbits.svg"});
  REQUIRE(r.code == 0);
  CHECK(std::filesystem::exists(dir / "orbits.svg"));
  CHECK(r.parsed()["layers"] == 2);

  auto envdir = scratch("env_out");
  std::filesystem::remove_all(envdir);
  setenv("PADYN_OUTPUT_DIR", envdir.string().c_str(), 1);
  auto s = run({"synth-field", "--kind", "rotation", "--n", "11", "--out", "rot.csv"});
  unsetenv("PADYN_OUTPUT_DIR");
  REQUIRE(s.code == 0);
  CHECK(std::filesystem::exists(envdir / "rot.csv"));
}

TEST_CASE("field matching from files") {
  auto dir = scratch("match");
  std::filesystem::create_directories(dir);
  auto s = run({"--output-dir", dir.string(), "synth-field", "--kind", "orbit", "--series",
                "x^3*(1 + 2*x + 0*x^2 + 1*x^3)", "--p", "3", "--seeds", "3,6,12,15,21,24", "--steps", "2", "--n",
                "401", "--out", "orbit.json"});
  REQUIRE(s.code == 0);
  write(dir / "cands.txt",
        "x^3*(1 + 0*x + 0*x^2 + 1*x^3)\nx^3*(1 + 2*x + 0*x^2 + 1*x^3)\nx^3*(1 + 2*x + 1*x^2 + 1*x^3)\n");
  auto m = run({"match-field", "--field", (dir / "orbit.json").string(), "--candidates", (dir / "cands.txt").string(),
                "--p", "3", "--seeds", "3,6,12,15,21,24", "--steps", "2"});
  REQUIRE(m.code == 0);
  CHECK(m.parsed()["ranking"][0]["candidate_id"] == 1);
}

TEST_CASE("tfilter and factorize") {
  auto t = run({"tfilter-check", "--r", "1/4", "--rstar", "1/2", "--count", "3"}).parsed();
  CHECK(t["specs"]["spec_iv"] == true);
  CHECK(t["sequence"]["holes"][2]["radius"] == "9/32");
  auto f = run({"factorize", "--e1", "[0,-1,1,0,0]", "--e2", "[0,-1,1,-10,-20]"}).parsed();
  CHECK(f["common_prime"] == 11);
  CHECK(run({"tfilter-check", "--r", "1/2", "--rstar", "1/2"}).code == 1);
}

TEST_CASE("surface scan without an admissible path still reports gaps") {
  auto dir = scratch("scan");
  auto r = run({"surface-scan", "--e1", "[0,0,0,0,1]", "--e2", "[0,0,0,0,-1]", "--p", "5", "--grid", "4", "--plot",
                "d.svg", "--output-dir", dir.string()});
  REQUIRE(r.code == 0);
  auto j = r.parsed();
  CHECK(j["path"].is_null());
  CHECK(j["fibers"][2]["t"] == "1/2");
  CHECK(j["fibers"][2]["reason"] == "singular");
  CHECK(j["report"]["collapses"].size() == 1);
  CHECK(std::filesystem::exists(dir / "d.svg"));
  auto g = run({"geodesic", "--e1", "[0,0,0,0,1]", "--e2", "[0,0,0,0,-1]", "--p", "5", "--grid", "4"});
  CHECK(g.code == 1);
  CHECK(g.parsed()["error"] == "NoAdmissiblePath");
}
