#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hermitia/graph.hpp"
#include "hermitia_cli/cli.hpp"

namespace hermitia {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("hermitia_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(Cli, InertiaOfBowtie) {
  const Outcome r = run({"inertia", file("bowtie.qgg", "n 5\nU 0 1\nU 0 2\nU 1 2\nU 0 3\nU 0 4\nU 3 4\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p=2 n=3 eta=0\n");
  EXPECT_EQ(run({"inertia", "--float", "-"}, "n 2\nA 0 1\n").out, "p=1 n=1 eta=0\n");
}

TEST_F(Cli, EquivArcAndEdge) {
  const std::string arc = file("arc.qgg", "n 2\nA 0 1\n");
  const std::string edge = file("edge.qgg", "n 2\nU 0 1\n");
  EXPECT_EQ(run({"equiv", arc, edge}).code, 0);
  const std::string odd = file("odd.qgg", "n 3\nA 0 1\nU 1 2\nU 0 2\n");
  const std::string tri = file("tri.qgg", "n 3\nU 0 1\nU 1 2\nU 0 2\n");
  const Outcome r = run({"equiv", odd, tri});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not equivalent\n");
  EXPECT_EQ(run({"equiv", "--iso", file("arc2.qgg", "n 2\nA 1 0\n"), edge}).code, 0);
}

TEST_F(Cli, ClassifyTextAndJson) {
  const std::string fig = file("fig.qgg", "");
  ASSERT_EQ(run({"generate", "K:q=3,2;n=3,1;a=1,b=1,c=0,d=0", "-o", fig}).code, 0);
  const Outcome text = run({"classify", fig});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out.rfind("thm12_iii", 0), 0U);
  const Outcome json = run({"classify", fig, "--json"});
  EXPECT_NE(json.out.find("\"cases\":[\"thm12_iii\"]"), std::string::npos);
  const Outcome none = run({"classify", "-"}, "n 6\nU 0 1\nU 2 3\nU 4 5\n");
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "none\n");
}

TEST_F(Cli, GenerateToStdout) {
  const Outcome r = run({"generate", "c3t:1,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph(r.out).size(), 3U);
  EXPECT_EQ(run({"generate", "c3t:1"}).code, 2);
}

TEST_F(Cli, CanonAndTwinReduce) {
  EXPECT_EQ(run({"canon", "-"}, "n 2\nA 0 1\n").out, "n 2\nU 0 1\n");
  EXPECT_EQ(run({"switch-canon", "-"}, "n 2\nA 0 1\n").out, "n 2\nU 0 1\n");
  const Outcome red = run({"twin-reduce", "-"}, "n 3\nU 0 1\nU 1 2\n");
  EXPECT_EQ(red.code, 0);
  EXPECT_EQ(parse_graph(red.out).order(), 2U);
}

TEST_F(Cli, EnumerateCounts) {
  EXPECT_EQ(run({"enumerate", "--n", "3", "--connected", "--count-only"}).out, "5\n");
  EXPECT_EQ(run({"enumerate", "--n", "4", "--min-n", "1", "--connected", "--mixed-only", "--count-only"}).code, 0);
  const Outcome listed = run({"enumerate", "--n", "2", "--connected"});
  EXPECT_EQ(listed.out, "# class 0\nn 2\nU 0 1\n\n");
  EXPECT_EQ(run({"enumerate", "--n", "9"}).code, 2);
}

TEST_F(Cli, VerifySuite) {
  const Outcome r = run({"verify", "--suite", "lem38"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("lem38: PASS", 0), 0U);
  EXPECT_EQ(run({"verify", "--suite", "c3t_rank", "--json"}).out.rfind("{\"checked\":192", 0), 0U);
  EXPECT_EQ(run({"verify", "--suite", "unknown"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
}

TEST_F(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"inertia"}).code, 2);
  const Outcome bad = run({"inertia", "-"}, "n 2\nU 0 5\n");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"inertia", (dir_ / "missing.qgg").string()}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace hermitia
