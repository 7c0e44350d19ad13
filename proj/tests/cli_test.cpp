// Copyright 2026 The edgecolor Authors
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


// Runs the command-line tool end to end through the shell.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "edgecolor/io.hpp"
#include "edgecolor/verify.hpp"
#include "gtest/gtest.h"

namespace edgecolor {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("edgecolor_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of the tool, with stdout captured into `out`.
  int run(const std::string& args, std::string* out = nullptr) const {
    const std::string capture = path("stdout.txt");
    const std::string cmd = std::string(EDGECOLOR_CLI_PATH) + " " + args + " > " + capture + " 2> " + path("stderr.txt");
    const int raw = std::system(cmd.c_str());
    if (out != nullptr) *out = slurp(capture);
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(run("gen --family gnm-random-simple --n 1000 --m 4000 --seed 7 --out " + path("a.txt")), 0);
  ASSERT_EQ(run("gen --family gnm-random-simple --n 1000 --m 4000 --seed 7 --out " + path("b.txt")), 0);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  const EdgeList list = read_edge_list_file(path("a.txt"));
  EXPECT_EQ(list.edges.size(), 4000u);
}

TEST_F(CliTest, GreedyOnMultigraph) {
  ASSERT_EQ(run("gen --family random-multigraph --n 50 --m 300 --seed 1 --out " + path("g.txt")), 0);
  ASSERT_EQ(run("color " + path("g.txt") + " --algorithm greedy --out " + path("c.txt")), 0);
  const EdgeList list = read_edge_list_file(path("g.txt"));
  const Graph g = build_graph(list.n, list.edges);
  EXPECT_FALSE(g.is_simple());
  const auto colors = read_coloring_file(path("c.txt"), g.num_edges());
  const ValidationReport r = verify_coloring(g, colors, 2 * g.max_degree() - 1);
  EXPECT_TRUE(r.legal);
  EXPECT_TRUE(r.within_budget);
  EXPECT_NE(run("color " + path("g.txt") + " --algorithm euler --out " + path("e.txt")), 0);
}

TEST_F(CliTest, RandomEulerSameSeedSameFile) {
  ASSERT_EQ(run("gen --family gnm-random-simple --n 300 --m 1200 --seed 3 --out " + path("g.txt")), 0);
  ASSERT_EQ(run("color " + path("g.txt") + " --algorithm random-euler --seed 42 --out " + path("c1.txt")), 0);
  ASSERT_EQ(run("color " + path("g.txt") + " --algorithm random-euler --seed 42 --out " + path("c2.txt")), 0);
  EXPECT_EQ(slurp(path("c1.txt")), slurp(path("c2.txt")));
}

TEST_F(CliTest, VerifyExitCodes) {
  {
    std::ofstream g(path("tri.txt"));
    g << "ec 3 3\n0 1\n1 2\n2 0\n";
    std::ofstream good(path("good.txt"));
    good << "0 1\n1 2\n2 3\n";
    std::ofstream bad(path("bad.txt"));
    bad << "0 1\n1 1\n2 2\n";
    std::ofstream partial(path("partial.txt"));
    partial << "0 1\n";
  }
  std::string out;
  EXPECT_EQ(run("verify " + path("tri.txt") + " " + path("good.txt"), &out), 0);
  EXPECT_NE(out.find("\"legal\":true"), std::string::npos);
  EXPECT_EQ(run("verify " + path("tri.txt") + " " + path("bad.txt"), &out), 1);
  EXPECT_NE(out.find("\"vertex\":1"), std::string::npos);
  // d = 2 but the coloring uses 3 colors: legal, over budget.
  EXPECT_EQ(run("verify " + path("tri.txt") + " " + path("good.txt") + " --budget 2", &out), 1);
  EXPECT_NE(out.find("\"legal\":true"), std::string::npos);
  EXPECT_NE(out.find("\"within_budget\":false"), std::string::npos);
  EXPECT_EQ(run("verify " + path("tri.txt") + " " + path("partial.txt")), 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("color"), 2);
  EXPECT_EQ(run("gen --family nope --n 5"), 2);
  {
    std::ofstream g(path("broken.txt"));
    g << "ec 3 2\n0 1\n";
  }
  EXPECT_EQ(run("color " + path("broken.txt")), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(CliTest, BenchWritesCsv) {
  {
    std::ofstream cfg(path("bench.cfg"));
    cfg << "family = gnm-random-simple\nsizes = 64, 128\nseeds = 0..1\nalgorithms = random-euler, greedy\n";
    std::ofstream empty(path("empty.cfg"));
  }
  std::string out;
  ASSERT_EQ(run("bench --quiet --config " + path("bench.cfg"), &out), 0);
  std::size_t lines = 0;
  for (const char c : out) lines += c == '\n' ? 1 : 0;
  EXPECT_EQ(lines, 9u);
  EXPECT_EQ(out.find(",legal,") != std::string::npos, true);
  ASSERT_EQ(run("bench --config " + path("empty.cfg"), &out), 0);
  EXPECT_EQ(out.find('\n'), out.size() - 1);
}

}  // namespace
}  // namespace edgecolor
