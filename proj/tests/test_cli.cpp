#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult raw_run(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

RunResult run(const std::string& args) { return raw_run(std::string(CHRONOPLAN_BIN) + " " + args); }

std::string golden(const std::string& name) {
  return std::string(CHRONOPLAN_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("plan-cost prints the summary line and the travel") {
  auto r = run("plan-cost --graph " + golden("g1.tg") + " --src 0 --dst 1 --budget inf --cost identity");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "delay=0 cost=5\n(0,0) (0,5) (1,5) (1,0)\n");

  auto tight = run("plan-cost --graph " + golden("g1.tg") + " --src 0 --dst 1 --budget 3");
  CHECK(tight.exit_code == 0);
  CHECK(tight.output == "delay=2 cost=3\n(0,0) (0,5) (1,5) (1,2)\n");
}

TEST_CASE("plan-history honors the bound") {
  auto r = run("plan-history --graph " + golden("g2.tg") + " --src 0 --dst 2 --history 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("delay=0 cost=1\n", 0) == 0);

  auto frozen = run("plan-history --graph " + golden("g2.tg") + " --src 0 --dst 2 --history 0");
  CHECK(frozen.exit_code == 0);
  CHECK(frozen.output.rfind("delay=3 cost=0\n", 0) == 0);
}

TEST_CASE("infeasible queries exit with 3") {
  auto r = run("plan-cost --graph " + golden("disconnected.tg") + " --src 0 --dst 2 --budget inf");
  CHECK(r.exit_code == 3);
  CHECK(r.output == "infeasible\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("plan-cost --graph /nonexistent.tg --src 0 --dst 1").exit_code == 2);
  CHECK(run("plan-cost").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("plan-cost --graph " + golden("g1.tg") + " --src 0 --dst 1 --cost cubic").exit_code == 2);
  CHECK(run("plan-cost --graph " + golden("bad.tg") + " --src 0 --dst 1").exit_code == 2);
  // Pricing that can dip below zero is rejected outright.
  auto sinking = run("plan-cost --graph " + golden("g1.tg") + " --src 0 --dst 1 --cost affine:-1,0");
  CHECK(sinking.exit_code == 2);
  CHECK(sinking.output.find("not user-optimizable") != std::string::npos);
}

TEST_CASE("non-friendly costs route through the closure reduction") {
  // Quadratic pricing is not sub-additive; the front end plans it under the
  // closure, realizing the final jump as unit steps.
  auto quad = run("plan-cost --graph " + golden("g1.tg") + " --src 0 --dst 1 --cost quadratic");
  CHECK(quad.exit_code == 0);
  CHECK(quad.output == "delay=0 cost=5\n(0,0) (0,5) (1,5) (1,4) (1,3) (1,2) (1,1) (1,0)\n");

  auto spiky = run("plan-cost --graph " + golden("g1.tg") +
                   " --src 0 --dst 1 --budget inf --cost \"table:5,1;tail=const:1\"");
  CHECK(spiky.exit_code == 0);
  CHECK(spiky.output == "delay=0 cost=1\n(0,0) (0,5) (1,5) (1,0)\n");
}

TEST_CASE("oracle answers and cross-checks the planners") {
  auto r = run("oracle --graph " + golden("g2.tg") + " --src 0 --dst 2 --budget inf --check");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "delay=0 cost=1\n");

  auto hist = run("oracle --graph " + golden("g2.tg") + " --src 0 --dst 2 --history 0 --check");
  CHECK(hist.exit_code == 0);
  CHECK(hist.output == "delay=3 cost=0\n");

  auto enumerated = run("oracle --graph " + golden("g1.tg") +
                        " --src 0 --dst 1 --budget inf --max-len 5");
  CHECK(enumerated.exit_code == 0);
  CHECK(enumerated.output == "delay=0 cost=5\n");
}

TEST_CASE("gen is deterministic and honors the seed override") {
  std::string args = "gen --nodes 4 --lifetime 5 --prob 0.3 --seed 7";
  auto a = run(args);
  auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("nodes 4\n", 0) == 0);

  // The environment variable takes precedence over --seed.
  auto overridden = raw_run("env CHRONOPLAN_SEED=8 " + std::string(CHRONOPLAN_BIN) +
                            " gen --nodes 4 --lifetime 5 --prob 0.3 --seed 7");
  CHECK(overridden.output != a.output);
  CHECK(overridden.output == run("gen --nodes 4 --lifetime 5 --prob 0.3 --seed 8").output);
}

TEST_CASE("render matches its golden file") {
  auto r = run("render --graph " + golden("g2.tg") +
               " --travel \"(0,0) (0,1) (1,1) (1,0) (2,0)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == read_file(golden("g2_render.txt")));

  auto dot = run("render --graph " + golden("g2.tg") + " --dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.rfind("digraph chronoplan {", 0) == 0);
}

TEST_SUITE_END();
