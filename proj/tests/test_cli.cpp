#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rwgraph");
  std::ostringstream out, err;
  int code = rwg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, WordsPositionalAndFlags) {
  auto a = run({"words", "A", "4", "w0"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(count_lines(a.out), 16);
  EXPECT_EQ(a.out.substr(0, 7), "121321\n");
  auto b = run({"words", "--type", "A", "--n", "4", "--element", "w0"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SignedElementSyntax) {
  auto r = run({"words", "--type", "B", "--n", "3", "--element", "-3,-2,-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "010210\n012010\n");
  auto p = run({"words", "B", "3", "-3,-2,-1"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out, r.out);
}

TEST(Cli, DiameterExamples) {
  auto r = run({"diameter", "--type", "B", "--n", "3", "--element", "w0", "--mode", "exact"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "13\n");
  EXPECT_EQ(run({"diameter", "A", "4", "w0", "--mode", "theorem"}).out, "7\n");
  auto bad = run({"diameter", "A", "4", "3412", "--mode", "theorem"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("3412"), std::string::npos);
  EXPECT_EQ(run({"diameter", "A", "4", "w0", "--mode", "fast"}).code, 2);
}

TEST(Cli, AccessibleAllSources) {
  auto r = run({"accessible", "--type", "A", "--n", "4", "--element", "w0", "--all-sources"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "132132\n213213\n231231\n312312\n");
  auto one = run({"accessible", "A", "4", "w0", "--source", "213213", "--format", "json"});
  EXPECT_EQ(one.code, 0);
  auto doc = nlohmann::json::parse(one.out);
  EXPECT_EQ(doc["accessible"], false);
  EXPECT_EQ(doc["witness"]["distance"], 7);
  EXPECT_EQ(doc["witness"]["separation"], 5);
  auto canonical = run({"accessible", "B", "3", "w0"});
  EXPECT_EQ(canonical.code, 0);
  EXPECT_NE(canonical.out.find("accessible, eccentricity 13"), std::string::npos);
}

TEST(Cli, GraphFormats) {
  auto dot = run({"graph", "--type", "A", "--n", "4", "--element", "w0", "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph G {", 0), 0u);
  EXPECT_EQ(std::count(dot.out.begin(), dot.out.end(), '-') / 2, 18);
  auto json = run({"graph", "A", "4", "w0", "--format", "json", "--diameter"});
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["stats"]["diameter"], 7);
  EXPECT_EQ(doc["edges"].size(), 18u);
  auto text = run({"graph", "A", "4", "3412"});
  EXPECT_NE(text.out.find("2132 -- 2312  X_{13,24}"), std::string::npos) << text.out;
  EXPECT_EQ(run({"words", "A", "4", "w0", "--format", "dot"}).code, 2);
}

TEST(Cli, CanonicalAndDistance) {
  auto c = run({"canonical", "A", "6", "316425", "--crossings"});
  EXPECT_EQ(c.out, "213543\nH23 H13 H24 H56 H26 H46\n");
  auto d = run({"distance", "A", "4", "w0", "--source", "213213", "--format", "json"});
  EXPECT_EQ(d.code, 0);
  auto doc = nlohmann::json::parse(d.out);
  EXPECT_EQ(doc["eccentricity"], 7);
  EXPECT_EQ(doc["distances"].size(), 16u);
  auto t = run({"distance", "A", "4", "w0"});
  EXPECT_NE(t.out.find("source 121321, eccentricity 7"), std::string::npos);
}

TEST(Cli, FlatsAndFormulas) {
  auto f = run({"flats", "A", "4"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("7 flats"), std::string::npos);
  auto l2 = run({"flats", "A", "4", "3412"});
  EXPECT_NE(l2.out.find("2 flats"), std::string::npos);
  auto e8 = run({"formulas", "--family", "E8"});
  EXPECT_EQ(e8.out, "E8 |L2| = 4900\n");
  auto d4 = run({"formulas", "--family", "D", "--param", "4", "--format", "json"});
  auto doc = nlohmann::json::parse(d4.out);
  EXPECT_EQ(doc[0]["l2"], 34);
  EXPECT_EQ(doc[0]["geometric"], 34);
  EXPECT_EQ(run({"formulas", "--family", "G2"}).code, 2);
  EXPECT_EQ(run({"formulas"}).code, 0);
}

TEST(Cli, Conjecture) {
  auto r = run({"conjecture", "A", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("24/24 elements pass"), std::string::npos);
  EXPECT_NE(r.err.find("24/24 elements"), std::string::npos);
  auto j = run({"conjecture", "B", "3", "--format", "json", "--workers", "1"});
  EXPECT_EQ(count_lines(j.out), 49);
  EXPECT_EQ(j.out, run({"conjecture", "B", "3", "--format", "json", "--workers", "3"}).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"words", "A", "4"}).code, 2);
  EXPECT_EQ(run({"words", "C", "4", "w0"}).code, 2);
  EXPECT_EQ(run({"words", "A", "4", "5321"}).code, 2);
  EXPECT_EQ(run({"distance", "A", "4", "w0", "--source", "2312"}).code, 2);
  auto budget = run({"words", "A", "7", "w0"});
  EXPECT_EQ(budget.code, 3);
  EXPECT_NE(budget.err.find("5000000"), std::string::npos);
  EXPECT_EQ(run({"graph", "A", "4", "w0", "--budget", "3"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EnvironmentOverrides) {
  ::setenv("RWGRAPH_BUDGET", "10", 1);
  EXPECT_EQ(run({"words", "A", "4", "w0"}).code, 3);
  EXPECT_EQ(run({"words", "A", "4", "w0", "--budget", "100"}).code, 0);
  ::setenv("RWGRAPH_BUDGET", "many", 1);
  EXPECT_EQ(run({"words", "A", "4", "w0"}).code, 2);
  ::unsetenv("RWGRAPH_BUDGET");
  ::setenv("RWGRAPH_SEED", "42", 1);
  auto a = run({"diameter", "A", "5", "w0", "--exhaustive-threshold", "10"});
  auto b = run({"diameter", "A", "5", "w0", "--exhaustive-threshold", "10"});
  ::unsetenv("RWGRAPH_SEED");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "rwgraph_cli_test.dot";
  auto r = run({"graph", "A", "4", "w0", "--format", "dot", "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run({"graph", "A", "4", "w0", "--format", "dot"}).out);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"words", "A", "4", "w0", "--output", "/nonexistent/dir/x"}).code, 2);
}
