// Drives the installed command line binary through every subcommand and
// checks outputs, exit codes, the RECT_SEED override and byte-identical
// reruns. The binary location and the fixture directory come in as compile
// definitions.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "cremona/jsonio.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_tool(const std::string& args) {
  std::string cmd = std::string(RECT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::string out;
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("monoid-dim matches the closed forms and rejects degree 1") {
  RunResult one = run_tool("monoid-dim --d 3 --vertexes p0");
  CHECK(one.code == 0);
  CHECK(one.out.find("\"enumerated\": 29") != std::string::npos);
  CHECK(one.out.find("\"formula\": 29") != std::string::npos);
  CHECK(one.out.find("\"match\": true") != std::string::npos);

  RunResult two = run_tool("monoid-dim --d 3 --vertexes p0,p4");
  CHECK(two.code == 0);
  CHECK(two.out.find("\"enumerated\": 24") != std::string::npos);
  CHECK(two.out.find("\"formula\": 24") != std::string::npos);

  CHECK(run_tool("monoid-dim --d 1").code == 2);
  CHECK(run_tool("monoid-dim --d 3 --vertexes p7").code == 2);
}

TEST_CASE("find-monoid searches ascending degrees on the embedded quartic") {
  RunResult found = run_tool("find-monoid --surface " +
                             fixture("conic_quartic.json") +
                             " --beta 1 --d-max 6 --seed 7");
  REQUIRE(found.code == 0);
  Monoid m = monoid_from_json(found.out);
  CHECK(m.d == 6);
  CHECK(m.vertexes == std::vector<int>{0, 4});

  // Below the first workable degree the search reports null and exit 3.
  RunResult none = run_tool("find-monoid --surface " +
                            fixture("conic_quartic.json") +
                            " --beta 1 --d 5 --seed 7");
  CHECK(none.code == 3);
  CHECK(none.out.find("null") != std::string::npos);

  CHECK(run_tool("find-monoid --surface no_such_file.json").code == 2);
}

TEST_CASE("cremona build, verify and apply round trip through files") {
  RunResult build = run_tool(
      "cremona build --monoid \"x0*x4 - x1*x2\" --output cli_quadric.json");
  REQUIRE(build.code == 0);
  CremonaMap m = map_from_json(build.out);
  CHECK(m.forward_degree == 2);

  // Reruns are byte-identical.
  RunResult again = run_tool("cremona build --monoid \"x0*x4 - x1*x2\"");
  CHECK(again.out == build.out);

  RunResult verify = run_tool("cremona verify --map cli_quadric.json --trials 40");
  CHECK(verify.code == 0);
  CHECK(verify.out.find("\"verified\": true") != std::string::npos);

  RunResult apply = run_tool("cremona apply --map cli_quadric.json --surface " +
                             fixture("segre.json"));
  REQUIRE(apply.code == 0);
  ParamSurface image = surface_from_json(apply.out);
  CHECK(image.ruling_degree() == 2);
  CHECK(image.section_degree() == 1);

  // A shuffled inverse still parses but fails the identity check: exit 4.
  CremonaMap broken = m;
  std::swap(broken.inverse.components[0], broken.inverse.components[1]);
  std::ofstream("cli_broken.json") << map_to_json(broken) << "\n";
  RunResult bad = run_tool("cremona verify --map cli_broken.json --trials 40");
  CHECK(bad.code == 4);
  CHECK(bad.out.find("\"verified\": false") != std::string::npos);
}

TEST_CASE("rectify completes on the special position and reports exhaustion") {
  std::string special = fixture("shared_pencil_quartic.json");
  RunResult done = run_tool("rectify --surface " + special + " --seed 7");
  REQUIRE(done.code == 0);
  CHECK(done.out.find("\"shortcut\": true") != std::string::npos);
  CHECK(done.out.find("\"final\"") != std::string::npos);

  RunResult rerun = run_tool("rectify --surface " + special + " --seed 7");
  CHECK(rerun.out == done.out);

  RunResult scroll = run_tool("rectify --surface " + fixture("segre.json"));
  CHECK(scroll.code == 0);
  CHECK(scroll.out.find("\"steps\": []") != std::string::npos);

  RunResult bounded = run_tool("rectify --surface " +
                               fixture("conic_quartic.json") +
                               " --seed 1 --beta-max 1 --d-max 3");
  CHECK(bounded.code == 3);
}

TEST_CASE("verify-lemmas prints the constants and certifies the grid") {
  RunResult c = run_tool("verify-lemmas --constants --precision 40");
  CHECK(c.code == 0);
  CHECK(c.out.find("2.5674683748524220916") != std::string::npos);
  CHECK(c.out.find("0.8628701082636757213") != std::string::npos);

  RunResult grid = run_tool("verify-lemmas --grid a=2..3,b=1..2 --json");
  CHECK(grid.code == 0);
  CHECK(grid.out.find("\"h_star\": 1") != std::string::npos);
  CHECK(grid.out.find("\"ok\": true") != std::string::npos);
  CHECK(grid.out.find("\"ok\": false") == std::string::npos);

  CHECK(run_tool("verify-lemmas").code == 2);
  CHECK(run_tool("verify-lemmas --grid b=1..2").code == 2);
}

TEST_CASE("demo-orbit raises the ruling degree by seeded monoid links") {
  RunResult orbit = run_tool("demo-orbit --surface " + fixture("segre.json") +
                             " --d1 2 --d2 1 --seed 3");
  REQUIRE(orbit.code == 0);
  CHECK(orbit.out.find("\"ruling_degree\": 2") != std::string::npos);

  // Identity links leave the scroll alone.
  RunResult id = run_tool("demo-orbit --surface " + fixture("segre.json") +
                          " --d1 1 --d2 1 --seed 3");
  CHECK(id.code == 0);
  CHECK(id.out.find("\"ruling_degree\": 1") != std::string::npos);
  CHECK(id.out.find("\"ruling_degree\": 2") == std::string::npos);

  CHECK(run_tool("demo-orbit --surface " + fixture("conic_quartic.json")).code == 2);
}

RunResult run_shell(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::string out;
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST_CASE("RECT_SEED overrides the flag") {
  std::string base = std::string(RECT_BIN) + " find-monoid --surface " +
                     fixture("conic_quartic.json") + " --beta 1 --d 6";
  RunResult flagged = run_shell(base + " --seed 7");
  RunResult overridden = run_shell("RECT_SEED=7 " + base + " --seed 999");
  CHECK(overridden.code == flagged.code);
  CHECK(overridden.out == flagged.out);
  CHECK(run_shell("RECT_SEED=xyz " + base + " --seed 7").code == 2);
}
