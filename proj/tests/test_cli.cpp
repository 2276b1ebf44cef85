#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the installed tool binary, capturing standard output only.
RunResult run(const std::string& args) {
  std::string cmd = std::string(RUBBLE_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 512> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("reach decides and exits accordingly") {
  auto yes = run("reach path:4 0,0,0,8 0");
  CHECK(yes.code == 0);
  CHECK(yes.out == "reachable=true\n");

  auto no = run("reach path:4 0,0,0,7 0");
  CHECK(no.code == 2);
  CHECK(no.out == "reachable=false\n");

  auto trivial = run("reach cycle:3 1,0,0 0");
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "reachable=true\n");
}

TEST_CASE("reach certificates print one move per line") {
  auto res = run("reach path:4 0,0,0,8 0 --certificate");
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "reachable=true");
  for (size_t i = 1; i < lines.size(); ++i) {
    CHECK(lines[i].front() == '(');
    CHECK(lines[i].find("->") != std::string::npos);
  }
}

TEST_CASE("reach emits machine-readable lines") {
  auto res = run("reach path:4 0,0,0,8 0 --json");
  CHECK(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["command"] == "reach");
  CHECK(j["value"] == true);
  CHECK(j["witness"]["target"] == 0);
  CHECK(j["witness"]["moves"].size() == 7);
  CHECK(j["stats"].contains("states"));

  auto neg = run("reach path:4 0,0,0,7 0 --json");
  CHECK(neg.code == 2);
  auto nj = nlohmann::json::parse(neg.out);
  CHECK(nj["value"] == false);
  CHECK(nj["witness"].is_null());
}

TEST_CASE("rho prints the value and the witness one level down") {
  auto res = run("rho cycle:6");
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "rho=8");
  CHECK(lines[1] == "witness_target=0");
  CHECK(lines[1].find("witness_target=") == 0);
  CHECK(lines[2].find("witness_dist=") == 0);

  auto petersen = run("rho petersen");
  CHECK(lines_of(petersen.out)[0] == "rho=5");
}

TEST_CASE("rho json output is self-describing") {
  auto res = run("rho cycle:5 --json");
  CHECK(res.code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["command"] == "rho");
  CHECK(j["value"] == 5);
  CHECK(j["witness"]["target"] == 0);
  CHECK(j["witness"]["distribution"] == "0,0,1,3,0");
  CHECK(j["stats"]["distributions"].is_number());
  CHECK(j["stats"]["states"].is_number());
  CHECK(j["stats"]["cache_hits"].is_number());
}

TEST_CASE("pebbling mode renames the headline value") {
  auto res = run("rho path:4 --mode=pebbling");
  CHECK(res.code == 0);
  CHECK(lines_of(res.out)[0] == "pi=8");
}

TEST_CASE("the cap stops runaway scans with exit 3") {
  auto res = run("rho cycle:7 --cap=8");
  CHECK(res.code == 3);

  auto res_opt = run("rho-opt path:5 --cap=2");
  CHECK(res_opt.code == 3);
}

TEST_CASE("rho-opt prints the covering witness") {
  auto res = run("rho-opt path:6");
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "rho_opt=4");
  CHECK(lines[1].find("witness_dist=") == 0);

  auto wheel = run("rho-opt wheel:5");
  CHECK(lines_of(wheel.out)[0] == "rho_opt=2");

  auto json_run = run("rho-opt cycle:6 --json");
  auto j = nlohmann::json::parse(json_run.out);
  CHECK(j["command"] == "rho-opt");
  CHECK(j["value"] == 3);
  CHECK(j["witness"]["distribution"].is_string());
}

TEST_CASE("verify expands ranges and flags mismatches") {
  auto res = run("verify cycle:3..8 --which=rho");
  CHECK(res.code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 6);
  for (const auto& line : lines) {
    CHECK(line.find(" computed=") != std::string::npos);
    CHECK(line.rfind(" ok") == line.size() - 3);
  }
  CHECK(lines[0].rfind("cycle:3 ", 0) == 0);

  auto opt = run("verify complete:2..5 --which=rho-opt");
  CHECK(opt.code == 0);
  for (const auto& line : lines_of(opt.out))
    CHECK(line.find("expected=2") != std::string::npos);

  auto cube = run("verify hypercube:2..4 --which=rho-opt --json");
  CHECK(cube.code == 0);
  auto cube_lines = lines_of(cube.out);
  REQUIRE(cube_lines.size() == 3);
  std::vector<int> values;
  for (const auto& line : cube_lines) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["command"] == "verify");
    CHECK(j["witness"]["ok"] == true);
    values.push_back(j["value"].get<int>());
  }
  CHECK(values == std::vector<int>{2, 3, 4});
}

TEST_CASE("verify accepts multi-parameter ranges") {
  auto res = run("verify kbipartite:2..3,2..3 --which=rho");
  CHECK(res.code == 0);
  CHECK(lines_of(res.out).size() == 4);
}

TEST_CASE("roll prints the normalized distribution") {
  auto res = run("roll cycle:6 0,0,3,1,1,0");
  CHECK(res.code == 0);
  CHECK(res.out == "0,1,1,1,1,1\n");

  auto j = nlohmann::json::parse(run("roll cycle:6 0,0,3,1,1,0 --json").out);
  CHECK(j["command"] == "roll");
  CHECK(j["value"] == "0,1,1,1,1,1");
}

TEST_CASE("untangle strips cycles from a moves file") {
  auto loop = write_temp("rubble_cli_loop.moves",
                         "(0,0->1)\n"
                         "(1,1->2)\n"
                         "(2,2->0)\n");
  auto res = run("untangle cycle:3 " + loop.string());
  CHECK(res.code == 0);
  CHECK(res.out.empty());

  auto keep = write_temp("rubble_cli_keep.moves",
                         "# stack walk\n"
                         "(2,2->1)\n"
                         "(2,2->1)\n"
                         "(1,1->0)\n");
  auto kept = run("untangle path:3 " + keep.string());
  CHECK(kept.code == 0);
  CHECK(lines_of(kept.out).size() == 3);

  std::filesystem::remove(loop);
  std::filesystem::remove(keep);
}

TEST_CASE("export-dot renders the transition digraph") {
  auto loop = write_temp("rubble_cli_dot.moves",
                         "(0,0->1)\n"
                         "(1,1->2)\n"
                         "(2,2->0)\n");
  auto res = run("export-dot cycle:3 " + loop.string());
  CHECK(res.code == 0);
  CHECK(res.out.find("digraph") != std::string::npos);
  size_t arrows = 0;
  for (size_t at = res.out.find("->"); at != std::string::npos; at = res.out.find("->", at + 2))
    ++arrows;
  CHECK(arrows == 6);

  auto empty = write_temp("rubble_cli_empty.moves", "# nothing\n");
  auto none = run("export-dot cycle:3 " + empty.string());
  CHECK(none.code == 0);
  CHECK(none.out.find("digraph") != std::string::npos);
  CHECK(none.out.find("->") == std::string::npos);

  std::filesystem::remove(loop);
  std::filesystem::remove(empty);
}

TEST_CASE("edge list files work as graph specs") {
  auto edges = write_temp("rubble_cli_graph.edges", "3\n0 1\n1 2\n");
  auto res = run("reach @" + edges.string() + " 0,0,4 0");
  CHECK(res.code == 0);
  CHECK(res.out == "reachable=true\n");
  std::filesystem::remove(edges);
}

TEST_CASE("usage and parse problems exit 1") {
  CHECK(run("nonsense").code == 1);
  CHECK(run("reach").code == 1);
  CHECK(run("reach bogus:3 1,1,1 0").code == 1);
  CHECK(run("reach path:3 1,1 0").code == 1);
  CHECK(run("reach path:3 1,1,1 9").code == 1);
  CHECK(run("rho path:3 --mode=chess").code == 1);
  CHECK(run("verify cycle:8..3 --which=rho").code == 1);
  CHECK(run("untangle path:3 /no/such/file.moves").code == 1);
}

TEST_CASE("the cli agrees with direct library results") {
  auto j = nlohmann::json::parse(run("rho path:3 --json").out);
  CHECK(j["value"] == 4);
  CHECK(j["witness"]["target"] == 0);
  CHECK(j["witness"]["distribution"] == "0,0,3");
}
