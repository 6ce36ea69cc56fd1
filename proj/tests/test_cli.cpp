// Copyright 2026 The QDT Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdt/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qdt/decision.hpp"
#include "qdt/problem.hpp"

using namespace qdt;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(QDT_FIXTURE_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

DecisionRecord decide(const std::string& path) {
  std::ifstream in(path);
  const auto doc = parse_problem(in);
  return decompose(doc.strategic, doc.lattice);
}

}  // namespace

TEST(Cli, validate_minimal) {
  const auto r = run({"validate", fixture("minimal.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mind space dimension: 1"), std::string::npos);
}

TEST(Cli, solve_interference_table) {
  const auto r = run({"solve", fixture("interference.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("optimal prospect: pi1 (#1)"), std::string::npos);
  EXPECT_NE(r.out.find("ordering: pi1 > pi2"), std::string::npos);
  EXPECT_NE(r.out.find("   1  pi1         1.000000    0.500000   +0.500000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("   2  pi2         0.000000    0.500000   -0.500000"), std::string::npos) << r.out;
}

TEST(Cli, degenerate_lattice_exits_3) {
  EXPECT_EQ(run({"solve", fixture("degenerate.json")}).code, cli::kDegenerateLattice);
  EXPECT_EQ(run({"decompose", fixture("degenerate.json")}).code, cli::kDegenerateLattice);
  EXPECT_EQ(run({"sample", fixture("degenerate.json"), "--shots", "10"}).code, cli::kDegenerateLattice);
  EXPECT_EQ(run({"validate", fixture("degenerate.json")}).code, cli::kOk);
}

TEST(Cli, validation_errors_exit_2) {
  EXPECT_EQ(run({"solve", fixture("does-not-exist.json")}).code, cli::kValidationError);
  EXPECT_EQ(run({"solve", "-"}, "{ not json").code, cli::kValidationError);
  const auto r = run({"validate", "-"}, R"({"actions": [{"name": "A", "modes": ["x"]}],
      "strategic_state": {"amplitudes": [[1,0],[0,0]]}, "prospects": []})");
  EXPECT_EQ(r.code, cli::kValidationError);
  EXPECT_NE(r.err.find("/strategic_state/amplitudes"), std::string::npos) << r.err;
  EXPECT_EQ(run({"frobnicate", fixture("minimal.json")}).code, cli::kValidationError);
  EXPECT_EQ(run({}).code, cli::kValidationError);
  EXPECT_EQ(run({"sample", fixture("minimal.json"), "--shots", "-3"}).code, cli::kValidationError);
}

TEST(Cli, help_exits_0) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

TEST(Cli, json_round_trip_is_exact) {
  const auto rec = decide(fixture("interference.json"));
  for (const char* cmd : {"solve", "decompose"}) {
    const auto r = run({cmd, fixture("interference.json"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["command"], cmd);
    ASSERT_EQ(j["prospects"].size(), rec.scores.size());
    for (std::size_t k = 0; k < rec.scores.size(); ++k) {
      const auto& pj = j["prospects"][k];
      EXPECT_EQ(pj["raw_p"].get<double>(), rec.scores[k].raw_p);
      EXPECT_EQ(pj["raw_p0"].get<double>(), rec.scores[k].raw_p0);
      EXPECT_EQ(pj["raw_q"].get<double>(), rec.scores[k].raw_q);
      EXPECT_EQ(pj["p"].get<double>(), rec.scores[k].p);
      EXPECT_EQ(pj["p0"].get<double>(), rec.scores[k].p0);
      EXPECT_EQ(pj["q"].get<double>(), rec.scores[k].q);
    }
    EXPECT_EQ(j["optimal"]["index"], 1);
    EXPECT_EQ(j["ordering"], "pi1 > pi2");
  }
}

TEST(Cli, sample_with_zero_shots_matches_solve) {
  const auto solve = json::parse(run({"solve", fixture("biased.json"), "--json"}).out);
  const auto sample = json::parse(run({"sample", fixture("biased.json"), "--json", "--shots", "0"}).out);
  auto decision = solve;
  decision.erase("command");
  EXPECT_EQ(sample["decision"], decision);
  EXPECT_FALSE(sample.contains("counts"));
  EXPECT_EQ(sample["chosen"]["index"], solve["optimal"]["index"]);
}

TEST(Cli, sample_reproducible_and_seed_override) {
  const auto a = json::parse(run({"sample", fixture("biased.json"), "--json"}).out);
  const auto b = json::parse(run({"sample", fixture("biased.json"), "--json"}).out);
  const auto c = json::parse(run({"sample", fixture("biased.json"), "--json", "--seed", "8"}).out);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["shots"], 100000);
  EXPECT_EQ(a["seed"], 7);
  EXPECT_EQ(c["seed"], 8);
  EXPECT_NE(a["counts"], c["counts"]);
  EXPECT_EQ(a["counts"][0].get<std::uint64_t>() + a["counts"][1].get<std::uint64_t>(), 100000u);
  EXPECT_EQ(a["empirical_choice"]["name"], "left");
}

TEST(Cli, enumerate_lists_basis) {
  const auto j = json::parse(run({"enumerate", fixture("interference.json"), "--json"}).out);
  ASSERT_EQ(j["basis"].size(), 4u);
  EXPECT_EQ(j["basis"][2]["flat_index"], 2);
  EXPECT_EQ(j["basis"][2]["multi_index"], json::array({2, 1}));
  EXPECT_EQ(j["basis"][2]["label"], "(A=a2, B=b1)");
  const auto text = run({"enumerate", fixture("interference.json")});
  EXPECT_NE(text.out.find("(A=a2, B=b1)"), std::string::npos);
}

TEST(Cli, explain_terms) {
  const auto j = json::parse(run({"explain", fixture("interference.json"), "--json"}).out);
  const auto& pi2 = j["prospects"][1];
  ASSERT_EQ(pi2["interference_terms"].size(), 2u);
  EXPECT_EQ(pi2["interference_terms"][0]["m"], 2);
  EXPECT_EQ(pi2["interference_terms"][0]["n"], 3);
  EXPECT_NEAR(pi2["interference_terms"][0]["value"][0].get<double>(), -0.125, 1e-15);
  const auto text = run({"explain", fixture("interference.json")});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("interference terms"), std::string::npos);
}

TEST(Cli, reads_stdin_and_writes_output_file) {
  std::ifstream in(fixture("interference.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  const auto path = std::filesystem::temp_directory_path() / "qdt_cli_test_output.json";
  const auto r = run({"solve", "-", "--json", "-o", path.string()}, ss.str());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream written(path);
  const auto j = json::parse(written);
  EXPECT_EQ(j["optimal"]["name"], "pi1");
  std::filesystem::remove(path);
}
