// Copyright 2026 The ramsey-approx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ramsey/serialize.hpp"

using namespace ramsey;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + RAMSEY_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ramsey_cli_" + name);
  std::ofstream(path) << content;
  return path;
}

std::string relation_file(const std::string& name, const std::string& kind, int alpha, int n, int m,
                          const std::vector<int>& labels) {
  Json j = {{"schema", kSchema}, {"kind", kind}, {"alpha", {0, alpha}}, {"n", n}, {"m", m}, {"labels", labels}};
  return temp_file(name, j.dump()).string();
}

}  // namespace

TEST(Cli, TreeJson) {
  const auto r = run("tree --alpha 1 --n 0 --format json");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["nodes"].dump(), "[[],[0]]");
  EXPECT_EQ(j["schema"], "ramsey-approx/1");
}

TEST(Cli, TreeRoundTrips) {
  for (const std::string alpha : {"2", "w", "w+1"}) {
    const std::uint32_t n = alpha == "w+1" ? 1 : 2;
    const auto r = run("tree --alpha " + alpha + " --n " + std::to_string(n));
    ASSERT_EQ(r.code, 0) << alpha;
    const TreeBlock b = tree_block_from_json(Json::parse(r.out));
    EXPECT_EQ(b.nodes, build_T(parse_ordinal(alpha), n)->nodes);
  }
  const auto s = run("tree --alpha 2 --n 2 --kind S");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(sblock_from_json(Json::parse(s.out)).nodes, build_S(2, 2)->nodes);
}

TEST(Cli, TreeDot) {
  const auto r = run("tree --alpha w --n 2 --format dot");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, BadOrdinalIsInvalid) {
  EXPECT_EQ(run("tree --alpha w^2 --n 0").code, 2);
  EXPECT_EQ(run("tree --alpha 1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, UnwritableOutIsIoError) { EXPECT_EQ(run("tree --alpha 1 --n 0 --out /nonexistent/dir/x.json").code, 1); }

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "ramsey_cli_out.json";
  ASSERT_EQ(run("--out " + path.string() + " tree --alpha 1 --n 0").code, 0);
  std::ifstream f(path);
  EXPECT_EQ(Json::parse(f)["n"], 0);
}

TEST(Cli, Count) {
  EXPECT_EQ(run("count --k 2 --n 2 --what R").out, "154\n");
  EXPECT_EQ(run("count --k 2 --n 3 --what AR").out, "3696\n");
  EXPECT_EQ(run("count --k 1 --n 0 --what R").out, "3\n");
  EXPECT_EQ(run("count --k 0 --n 0").code, 2);
  EXPECT_EQ(run("count --k 2 --n 0 --what AR").code, 2);
}

TEST(Cli, Enumerate) {
  const auto r = run("enumerate DC --alpha 2 --n 2 --m 3");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["data"]["count"], "154");
  EXPECT_EQ(j["data"]["items"].size(), 154u);
  EXPECT_EQ(Json::parse(run("enumerate R --alpha 1 --n 0 --m 2").out)["data"]["count"], "3");
  EXPECT_EQ(Json::parse(run("enumerate AR --alpha 1 --n 2 --m 3").out)["data"]["count"], "10");
  EXPECT_EQ(run("enumerate R --alpha w --n 0 --m 1").code, 2);
}

TEST(Cli, DataSectionIsDeterministic) {
  const auto a = Json::parse(run("enumerate R --alpha 2 --n 1 --m 3").out);
  const auto b = Json::parse(run("--jobs 4 enumerate R --alpha 2 --n 1 --m 3").out);
  EXPECT_EQ(a["data"], b["data"]);
  const auto c = Json::parse(run("verify fct --alpha 1 --n 0 --k 2 --max-m 4").out);
  const auto d = Json::parse(run("--jobs 3 verify fct --alpha 1 --n 0 --k 2 --max-m 4").out);
  EXPECT_EQ(c["data"], d["data"]);
  EXPECT_EQ(run("order --alpha 2 --n 1 --m 3").out, run("order --alpha 2 --n 1 --m 3").out);
}

TEST(Cli, VerifyPigeonhole) {
  const auto r = run("verify pigeonhole --alpha 1 --n 0 --k 1 --max-m 5");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["data"]["result"], 2);
  EXPECT_EQ(j["data"]["theorem"], "pigeonhole");
  EXPECT_TRUE(j["meta"].contains("elapsed_ms"));
  EXPECT_FALSE(j["data"].contains("elapsed_ms"));
}

TEST(Cli, VerifyPigeonholeOutOfRangeIsViolation) {
  EXPECT_EQ(run("verify pigeonhole --alpha 1 --n 0 --k 1 --max-m 1").code, 3);
}

TEST(Cli, VerifyDagger) {
  const auto r = run("verify dagger --gamma 0 --beta w --l 0..2");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["data"]["result"], "pass");
  EXPECT_EQ(j["data"]["rows"].size(), 3u);
  EXPECT_EQ(run("verify dagger --gamma 0 --beta w --l 2..0").code, 2);
}

TEST(Cli, VerifyFct) {
  const auto r = run("verify fct --alpha 1 --n 0 --k 1 --max-m 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["data"]["result"], 1);
}

TEST(Cli, VerifyDistinctness) {
  const auto r = run("verify distinctness --alpha 1 --n 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["data"]["unseparated"], 0);
}

TEST(Cli, BudgetExhaustionIsInfeasible) {
  EXPECT_EQ(run("--budget 3 verify fct --alpha 1 --n 0 --k 2 --max-m 4").code, 4);
  const auto r = run("verify fct --alpha 1 --n 0 --k 2 --max-m 4", "RAMSEY_BUDGET=3");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(Json::parse(r.out)["data"]["result"], "infeasible");
  EXPECT_EQ(run("--budget 1000000 verify fct --alpha 1 --n 0 --k 2 --max-m 4", "RAMSEY_BUDGET=3").code, 0);
}

TEST(Cli, CanonizeTrivialRelation) {
  const auto path = relation_file("trivial.json", "R", 1, 0, 2, {0, 0, 0});
  const auto r = run("canonize " + path);
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["data"]["result"]["S"]["nodes"].size(), 1u);
  EXPECT_TRUE(j["data"]["result"]["verified"].get<bool>());
}

TEST(Cli, CanonizeIdentityRelation) {
  const auto path = relation_file("identity.json", "R", 1, 0, 2, {0, 1, 2});
  const auto r = run("canonize " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["data"]["result"]["S"]["nodes"].size(), build_S(1, 0)->size());
}

TEST(Cli, CanonizeAsymmetricPartitionGivesPairWitness) {
  const auto path = relation_file("asym.json", "R", 1, 0, 2, {0, 0, 1});
  const auto r = run("canonize --k 1 " + path);
  ASSERT_EQ(r.code, 0);
  const Json y = Json::parse(r.out)["data"]["result"]["y"];
  EXPECT_EQ(y["level"], 1);
  EXPECT_EQ(y["nodes"].size(), 4u);  // root, <2> and a pair of leaves
}

TEST(Cli, CanonizeWithoutWitness) {
  const auto path = relation_file("split.json", "R", 1, 0, 3, {0, 0, 1, 1});
  EXPECT_EQ(run("canonize " + path).code, 5);
}

TEST(Cli, CanonizeApproximations) {
  const auto path = relation_file("ar.json", "AR", 1, 2, 3, std::vector<int>(10, 0));
  const auto r = run("canonize " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["data"]["result"]["S"].size(), 2u);
}

TEST(Cli, CanonizeSchemaMismatch) {
  EXPECT_EQ(run("canonize " + temp_file("bad1.json", R"({"schema":"nope"})").string()).code, 2);
  EXPECT_EQ(run("canonize " + temp_file("bad2.json", "not json").string()).code, 2);
  EXPECT_EQ(run("canonize " + relation_file("bad3.json", "R", 1, 0, 2, {0, 0})).code, 2);
  EXPECT_EQ(run("canonize /nonexistent/rel.json").code, 1);
}

TEST(Cli, OrderChains) {
  const auto r = run("order --alpha 1 --n 0 --m 2");
  ASSERT_EQ(r.code, 0);
  const Json v = Json::parse(r.out)["data"]["vertices"];
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0]["covered_by"].dump(), "[1]");
  EXPECT_EQ(v[1]["covered_by"].dump(), "[2]");
  const Json w = Json::parse(run("order --alpha 2 --n 0 --m 3").out)["data"]["vertices"];
  ASSERT_EQ(w.size(), 4u);
  std::set<std::string> labels;
  for (const auto& x : w) labels.insert(x["tukey_class"].dump());
  EXPECT_EQ(labels, (std::set<std::string>{"\"PRINCIPAL\"", "[0,0]", "[0,1]", "[0,2]"}));
  EXPECT_EQ(run("order --alpha 1 --n 2 --m 0").code, 2);
  EXPECT_EQ(run("--format dot order --alpha 1 --n 0 --m 2").out.rfind("digraph", 0), 0u);
}
