#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

const char* cli() { return ITERPOLY_CLI_PATH; }

int run(const std::string& args) {
  std::string cmd = std::string(cli()) + " " + args + " >/tmp/iterpoly_cli_out.txt 2>/tmp/iterpoly_cli_err.txt";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const char* path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run("graph") == 2);                       // --p missing
  CHECK(run("bogus") == 2);                       // unknown subcommand
  CHECK(run("verify nosuchsuite") == 2);          // unknown suite
  CHECK(run("sequence --p 7 --k 1 --seed x^2-1") == 2);  // reducible seed
  CHECK(slurp("/tmp/iterpoly_cli_err.txt").find("invalid seed") != std::string::npos);
}

TEST_CASE("cli: graph command") {
  CHECK(run("graph --p 3 --n 1 --format json --out /tmp/iterpoly_g3") == 0);
  auto j = nlohmann::json::parse(slurp("/tmp/iterpoly_g3.json"));
  CHECK(j["q"] == 3);
  CHECK(j["nodes"].size() == 4);

  CHECK(run("graph --p 7 --n 2 --format both --labels dlog --out /tmp/iterpoly_g49") == 0);
  std::string dot = slurp("/tmp/iterpoly_g49.dot");
  CHECK(dot.find("digraph") == 0);
  std::string stdout_text = slurp("/tmp/iterpoly_cli_out.txt");
  CHECK(stdout_text.find("34") != std::string::npos);  // component summary

  CHECK(run("graph --p 7 --n 2 --cap 10") == 3);  // over the cap
}

TEST_CASE("cli: sequence command") {
  CHECK(run("sequence --p 7 --k 1 --seed x+1 --steps 12 --out /tmp/iterpoly_seq.json") == 0);
  auto j = nlohmann::json::parse(slurp("/tmp/iterpoly_seq.json"));
  CHECK(j["bound"] == 3);
  CHECK(j["g"].size() == 13);
  std::string table = slurp("/tmp/iterpoly_cli_out.txt");
  CHECK(table.find("t_g=") != std::string::npos);
}

TEST_CASE("cli: verify command") {
  CHECK(run("verify composition --p 5") == 0);
  std::string report = slurp("/tmp/iterpoly_cli_out.txt");
  CHECK(report.find("[PASS] composition p=5") != std::string::npos);
  CHECK(run("verify valuation") == 0);
}

TEST_CASE("cli: atlas command") {
  CHECK(run("atlas --p-min 5 --p-max 7 --n 1 --steps 8 --out /tmp/iterpoly_atlas.csv") == 0);
  std::string csv = slurp("/tmp/iterpoly_atlas.csv");
  CHECK(csv.find("p,n,k,") == 0);
  // 4 + 6 data rows.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  CHECK(run("atlas --p-min 5 --p-max 3 --out /tmp/iterpoly_atlas_empty.csv") == 0);
  std::string empty_csv = slurp("/tmp/iterpoly_atlas_empty.csv");
  CHECK(std::count(empty_csv.begin(), empty_csv.end(), '\n') == 1);  // header only
}

TEST_CASE("cli: environment cap") {
  std::string cmd = std::string("ITERPOLY_CAP=10 ") + cli() +
                    " graph --p 7 --n 2 >/dev/null 2>/dev/null";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  CHECK(WEXITSTATUS(rc) == 3);
}
