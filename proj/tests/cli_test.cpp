#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "reference.hpp"

namespace {

namespace fs = std::filesystem;
using formation::testing::data_path;

struct Outcome {
  int code = -1;
  std::string output;
};

Outcome run(const std::string& args) {
  const std::string command = std::string(FORMATION_CLI) + " " + args + " 2>&1";
  Outcome r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> chunk{};
  while (std::fgets(chunk.data(), chunk.size(), pipe) != nullptr) r.output += chunk.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("formation_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

const std::string kExample = data_path("eight_node.json");

TEST_F(Cli, PlanExample) {
  const Outcome r = run("plan --graph " + kExample + " --robots 4 --start 1 --goal 7 --out " + tmp("plan.json"));
  ASSERT_EQ(r.code, 0) << r.output;
  const auto plan = read_json(tmp("plan.json"));
  EXPECT_EQ(plan["formation_cost"], 449);
  EXPECT_EQ(plan["robots"].size(), 4u);
}

TEST_F(Cli, CostTableWithoutGoal) {
  const Outcome r = run("plan --graph " + kExample + " --robots 2 --start 1 --out " + tmp("table.json"));
  ASSERT_EQ(r.code, 0) << r.output;
  const auto table = read_json(tmp("table.json"));
  bool found = false;
  for (const auto& row : table["table"]) {
    if (row["node"] == 7 && row["robots"] == 2) {
      EXPECT_EQ(row["cost"], 377);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(Cli, VerifyExample) {
  Outcome r = run("verify --graph " + kExample + " --robots 4 --start 1 --goal 7");
  EXPECT_EQ(r.code, 0) << r.output;
  EXPECT_NE(r.output.find("planner 449"), std::string::npos);
  EXPECT_NE(r.output.find("PASS"), std::string::npos);
  r = run("verify --graph " + kExample + " --robots 2 --start 1 --goal 7");
  EXPECT_EQ(r.code, 0) << r.output;
}

TEST_F(Cli, GenerateThenVerify) {
  Outcome r = run("gen --seed 42 --vertices 6 --robots 3 --out " + tmp("g.json"));
  ASSERT_EQ(r.code, 0) << r.output;
  r = run("verify --graph " + tmp("g.json") + " --robots 3 --start 1 --goal 6");
  EXPECT_EQ(r.code, 0) << r.output;
  EXPECT_NE(r.output.find("PASS"), std::string::npos);
}

TEST_F(Cli, CheapestRuleCanFail) {
  // The trap graph from the planner tests, as a file.
  nlohmann::json g;
  g["vertices"] = nlohmann::json::array();
  for (int v = 0; v <= 7; ++v) g["vertices"].push_back({{"id", v}, {"terminal", v == 0 || v == 7}});
  const int edges[][5] = {{0, 0, 1, 10, 50}, {1, 0, 2, 20, 50}, {2, 1, 3, 10, 50}, {3, 2, 3, 10, 50}, {4, 3, 4, 10, 5},
                          {5, 4, 5, 10, 50}, {6, 4, 6, 10, 50}, {7, 5, 7, 10, 50}, {8, 6, 7, 10, 50}};
  g["edges"] = nlohmann::json::array();
  for (const auto& e : edges) {
    g["edges"].push_back({{"id", e[0]}, {"u", e[1]}, {"v", e[2]}, {"costs", {e[3] + e[4], e[3] + 2 * e[4]}}});
  }
  std::ofstream(tmp("trap.json")) << g.dump();
  const Outcome r = run("verify --graph " + tmp("trap.json") + " --robots 2 --start 0 --goal 7 --split cheapest");
  EXPECT_EQ(r.code, 1) << r.output;
  EXPECT_NE(r.output.find("FAIL"), std::string::npos);
}

TEST_F(Cli, BlockedMap) {
  const Outcome r = run("build --map " + data_path("maps/blocked.json") + " --robots 2");
  EXPECT_EQ(r.code, 2) << r.output;
  EXPECT_NE(r.output.find("free space empty"), std::string::npos);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run("plan --graph " + kExample + " --robots 2 --start 99 --goal 7").code, 2);
  EXPECT_EQ(run("plan --graph " + kExample + " --robots 11 --start 1 --goal 7").code, 2);
  EXPECT_EQ(run("plan --graph /nonexistent.json --robots 2 --start 1").code, 2);
  EXPECT_EQ(run("plan --robots 2").code, 2);
  std::ofstream(tmp("broken.json")) << "{\"vertices\": [";
  const Outcome r = run("plan --graph " + tmp("broken.json") + " --robots 1 --start 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("malformed"), std::string::npos) << r.output;
}

TEST_F(Cli, StateCap) {
  const Outcome r = run("plan --graph " + kExample + " --robots 4 --start 1 --goal 7 --max-states 10");
  EXPECT_EQ(r.code, 3) << r.output;
}

TEST_F(Cli, BuildSquare) {
  const Outcome r = run("build --map " + data_path("maps/square.json") + " --robots 2 --step 0.5 --out " + tmp("sq.json"));
  ASSERT_EQ(r.code, 0) << r.output;
  const auto g = read_json(tmp("sq.json"));
  std::map<int, int> degree;
  for (const auto& e : g["edges"]) {
    ++degree[e["u"].get<int>()];
    ++degree[e["v"].get<int>()];
    EXPECT_EQ(e["costs"].size(), 2u);
  }
  EXPECT_FALSE(degree.empty());
  for (const auto& [v, d] : degree) EXPECT_LE(d, 3);
}

TEST_F(Cli, BuildPlanRender) {
  Outcome r = run("build --map " + data_path("maps/rooms.json") +
              " --robots 3 --start 5,5 --goal 95,55 --clearance 1 --step 4 --out " + tmp("rooms.json"));
  ASSERT_EQ(r.code, 0) << r.output;
  const auto g = read_json(tmp("rooms.json"));
  std::vector<int> terminals;
  for (const auto& v : g["vertices"]) {
    if (v.value("terminal", false)) terminals.push_back(v["id"]);
  }
  ASSERT_EQ(terminals.size(), 2u);
  r = run("plan --graph " + tmp("rooms.json") + " --robots 3 --start " + std::to_string(terminals[0]) +
          " --goal " + std::to_string(terminals[1]) + " --out " + tmp("plan.json"));
  ASSERT_EQ(r.code, 0) << r.output;
  r = run("render --graph " + tmp("rooms.json") + " --map " + data_path("maps/rooms.json") + " --plan " +
          tmp("plan.json") + " --out " + tmp("out.svg"));
  ASSERT_EQ(r.code, 0) << r.output;
  std::ifstream in(tmp("out.svg"));
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(svg.find("usage-label"), std::string::npos);
  EXPECT_NE(svg.find("class=\"obstacle\""), std::string::npos);
}

}  // namespace
