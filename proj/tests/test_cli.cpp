#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "prodstruct/prodstruct.hpp"

using namespace prodstruct;
using io::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  json report;
};

class Cli : public ::testing::Test {
 protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("prodstruct_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string file(const std::string& name) const { return (dir / name).string(); }

  std::string put(const std::string& name, const json& j) const {
    io::write_file(file(name), j);
    return file(name);
  }

  CliRun run(const std::string& args) const {
    std::string cmd = std::string(PRODSTRUCT_CLI) + " " + args + " 2>/dev/null";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!out.empty()) r.report = json::parse(out, nullptr, false);
    return r;
  }
};

PathDecomposition strips(int n, bool rows) {
  PathDecomposition pd{n * n, {}};
  for (int i = 0; i + 1 < n; ++i) {
    Bag b;
    for (int t = 0; t < n; ++t)
      for (int d = 0; d < 2; ++d) b.push_back(rows ? (i + d) * n + t : t * n + i + d);
    pd.bags.push_back(sorted_bag(b));
  }
  return pd;
}

}  // namespace

TEST_F(Cli, ExactTreeTreewidthOfK4) {
  auto g = put("k4.json", io::to_json(complete(4)));
  auto r = run("exact ttw " + g);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["outputs"]["value"], 3);
  EXPECT_EQ(r.report["exit_code"], 0);
  EXPECT_TRUE(r.report["seed"].is_null());
  ASSERT_EQ(r.report["inputs"].size(), 1u);
}

TEST_F(Cli, ExactWritesReportFile) {
  auto g = put("c5.json", io::to_json(cycle(5)));
  auto r = run("--seed 3 -o " + file("report.json") + " exact tw " + g);
  EXPECT_EQ(r.code, 0);
  json report = io::read_file(file("report.json"));
  EXPECT_EQ(report["param"], "tw");
  EXPECT_EQ(report["value"], 2);
  EXPECT_EQ(report["seed"], 3);
  EXPECT_TRUE(validate(cycle(5), io::tree_decomposition_from_json(report["witness"])));
}

TEST_F(Cli, CheckOrthoOnGrid) {
  auto g = put("grid.json", io::to_json(grid2(4, 4)));
  auto rows = put("rows.json", io::to_json(strips(4, true)));
  auto cols = put("cols.json", io::to_json(strips(4, false).to_tree()));
  auto r = run("check ortho " + g + " " + rows + " " + cols);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["outputs"]["value"], 4);
  EXPECT_EQ(run("check ortho " + g + " " + rows + " " + cols + " --k 3").code, 1);
  EXPECT_EQ(run("check ortho " + g + " " + rows + " " + cols + " --k 4").code, 0);
}

TEST_F(Cli, GenHexThenCheck) {
  auto r = run("gen hex --n 3 -o " + file("hex.json") + " --witness " + file("hex_pd.json"));
  ASSERT_EQ(r.code, 0);
  auto c = run("check pd " + file("hex.json") + " " + file("hex_pd.json"));
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.report["outputs"]["spans"], json::parse("[2,2]"));
}

TEST_F(Cli, ExitCodes) {
  auto bad = put("loop.json", json::parse(R"({"n":2,"edges":[[1,1]]})"));
  auto r = run("exact tw " + bad);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["error"]["kind"], "format");
  EXPECT_EQ(run("exact tw " + file("missing.json")).code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("gen stacked --n 8").code, 2);
  auto big = put("p20.json", io::to_json(path(20)));
  auto capped = run("exact bw " + big);
  EXPECT_EQ(capped.code, 2);
  EXPECT_EQ(capped.report["error"]["kind"], "size cap");

  auto p3 = put("p3.json", io::to_json(path(3)));
  auto broken = put("broken.json", io::to_json(PathDecomposition{3, {{0, 1}}}));
  EXPECT_EQ(run("check pd " + p3 + " " + broken).code, 1);
}

TEST_F(Cli, SeededGenerationIsReproducible) {
  auto a = run("--seed 11 gen stacked --n 15 -o " + file("a.json"));
  auto b = run("--seed 11 gen stacked --n 15 -o " + file("b.json"));
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(io::read_file(file("a.json")), io::read_file(file("b.json")));
  EXPECT_EQ(run("check triangulation " + file("a.json")).code, 0);
  auto d = run("decomp planar-lexbfs " + file("a.json"));
  EXPECT_EQ(d.code, 0);
  EXPECT_LE(d.report["outputs"]["max_span"].get<int>(), 3);
}

TEST_F(Cli, ProductAndEmbedding) {
  auto a = put("p2.json", io::to_json(path(2)));
  auto r = run("product strong " + a + " " + a);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::graph_from_json(r.report["outputs"]["product"]), complete(4));
  auto e = run("embed join-product " + a + " " + a + " --p 1 --q 1 -o " + file("e.json"));
  ASSERT_EQ(e.code, 0);
  auto guest = put("guest.json", io::to_json(join_product_guest(path(2), path(2), 1, 1)));
  EXPECT_EQ(run("check embedding " + guest + " " + file("e.json")).code, 0);
}
