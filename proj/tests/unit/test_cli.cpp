#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcenter/cli/app.hpp"

using namespace kcenter;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kcenter_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  static std::string field(const std::string& line, const std::string& key) {
    return cli::parse_kv_line(line).at(key);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenRandomCycle) {
  const auto r = run({"gen", "random", "--kind", "cycle", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Graph g = parse_graph(r.out);
  EXPECT_EQ(g.n(), 6u);
  EXPECT_EQ(g.m(), 6u);
  const auto w = run({"gen", "random", "--kind", "er", "--n", "20", "--p", "0.2", "--seed", "3", "--max-weight", "4",
                      "--out", path("er.txt")});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_LE(read_graph_file(path("er.txt")).max_weight(), 4u);
  EXPECT_EQ(run({"gen", "random", "--kind", "blob", "--n", "6"}).code, 2);
}

TEST_F(CliTest, SolveExamplesAndExitCodes) {
  const auto c12 = write("c12.txt", run({"gen", "random", "--kind", "cycle", "--n", "12"}).out);
  auto r = run({"solve", "--graph", c12, "--algo", "exact", "--k", "2", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "radius"), "3");
  EXPECT_EQ(field(r.out, "status"), "ok");
  EXPECT_EQ(r.out.find("elapsed_ms"), std::string::npos);

  r = run({"solve", "--graph", c12, "--algo", "k-2k", "--k", "2", "--with-exact", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "exact"), "3");
  EXPECT_EQ(field(r.out, "bound_satisfied"), "true");

  r = run({"solve", "--graph", c12, "--algo", "k-2l", "--k", "2", "--ell", "1", "--json", "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["algo"], "k-2l");
  EXPECT_EQ(j["l"], 1);
  EXPECT_LE(j["radius"].get<int>(), 5);

  const auto split = write("split.txt", "4 1\n0 1\n");
  EXPECT_EQ(run({"solve", "--graph", split, "--algo", "gonzalez", "--k", "2"}).code, 3);
  EXPECT_EQ(run({"solve", "--graph", c12, "--algo", "nope", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"solve", "--graph", c12, "--algo", "c2-53", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"solve", "--graph", c12, "--algo", "exact", "--k", "3", "--budget", "10"}).code, 4);
  EXPECT_EQ(run({"solve", "--graph", write("bad.txt", "3 1\n0 9\n"), "--algo", "exact", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"solve", "--graph", path("missing.txt"), "--algo", "exact", "--k", "1"}).code, 2);
}

TEST_F(CliTest, VerifyGraphCover) {
  const auto p7 = write("p7.txt", run({"gen", "random", "--kind", "path", "--n", "7"}).out);
  auto r = run({"verify", "--graph", p7, "--center-list", "1,5", "--radius", "2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(field(r.out, "verify"), "pass");
  EXPECT_EQ(field(r.out, "cover_radius"), "2");
  r = run({"verify", "--graph", p7, "--center-list", "0", "--radius", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(field(r.out, "verify"), "fail");
  EXPECT_EQ(run({"verify", "--graph", p7, "--center-list", "9", "--radius", "5"}).code, 1);
}

TEST_F(CliTest, VerifyReplaysSolveRecord) {
  const auto c18 = write("c18.txt", run({"gen", "random", "--kind", "cycle", "--n", "18"}).out);
  const auto s = run({"solve", "--graph", c18, "--algo", "k-32", "--k", "3", "--seed", "4", "--no-timing"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto rec = write("rec.txt", s.out);
  EXPECT_EQ(run({"verify", "--graph", c18, "--record", rec}).code, 0);
  const auto radius = std::stoi(field(s.out, "radius"));
  EXPECT_EQ(run({"verify", "--graph", c18, "--record", rec, "--radius", std::to_string(radius - 1)}).code, 1);
}

TEST_F(CliTest, GadgetGenerationAndVerification) {
  const auto sc = write("sc.txt", "4 5\n0 1\n1 2\n2 3\n0 3\n0 2\n");
  const auto cover = write("cover.txt", "0 2\n");
  auto r = run({"gen", "gadget", "--t", "1", "--ell", "2", "--setcover", sc, "--out", path("g1")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "yes_radius"), "6");
  EXPECT_EQ(field(r.out, "center_budget"), "3");
  EXPECT_TRUE(fs::exists(path("g1.graph")));
  EXPECT_TRUE(fs::exists(path("g1.roles")));
  EXPECT_EQ(run({"verify", "--gadget", path("g1"), "--cover", cover}).code, 0);

  r = run({"gen", "gadget", "--t", "3", "--ell", "1", "--k", "2", "--setcover", sc, "--out", path("g3")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "center_budget"), "9");
  EXPECT_EQ(field(r.out, "gadgets"), "3");
  auto v = run({"verify", "--gadget", path("g3"), "--cover", cover});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(field(v.out, "centers"), "9");

  r = run({"gen", "simple-gadget", "--ell", "1", "--setcover", sc, "--out", path("s")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "yes_radius"), "2");
  EXPECT_EQ(run({"verify", "--gadget", path("s"), "--cover", cover}).code, 0);

  // {0, 1} misses b = 2
  const auto bad = write("bad_cover.txt", "0 1\n");
  EXPECT_EQ(run({"verify", "--gadget", path("g1"), "--cover", bad}).code, 1);
  // both or neither source
  EXPECT_EQ(run({"gen", "gadget", "--t", "1", "--ell", "1", "--out", path("x")}).code, 2);
}

TEST_F(CliTest, GadgetFromOrthogonalVectorsWithPower) {
  const auto ov = write("ov.txt", "4 3\n100\n010\n001\n000\n");
  auto r = run({"gen", "simple-gadget", "--ell", "1", "--ov", ov, "--power", "2", "--out", path("p")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "k"), "1");  // the zero vector covers everything, and so does (3, 3)
}

TEST_F(CliTest, BenchRecordsAndAggregates) {
  write("plan.txt",
        "instance star5 star n=5\n"
        "algo gonzalez k=1\n"
        "seeds 1 2 3\n");
  auto r = run({"bench", "--plan", path("plan.txt"), "--no-timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::size_t records = 0, aggregates = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("aggregate", 0) == 0) {
      ++aggregates;
      EXPECT_EQ(field(line.substr(10), "success_rate"), "1.000000");
      EXPECT_EQ(field(line.substr(10), "mean_ratio"), "1.000000");
    } else if (!line.empty()) {
      ++records;
      EXPECT_EQ(field(line, "instance"), "star5");
    }
  }
  EXPECT_EQ(records, 3u);
  EXPECT_EQ(aggregates, 1u);

  write("broken.txt", "instance a cycle n=5\nalgo gonzalez\n");
  EXPECT_EQ(run({"bench", "--plan", path("broken.txt")}).code, 2);
  write("typo.txt", "instanse a cycle n=5\n");
  EXPECT_EQ(run({"bench", "--plan", path("typo.txt")}).code, 2);
}

TEST_F(CliTest, BenchJsonAndFileInstances) {
  write("g.txt", "4 3\n0 1\n1 2\n2 3\n");
  write("plan.txt",
        "instance p4 file g.txt\n"
        "instance c9 cycle n=9\n"
        "algo k-2k k=2\n"
        "algo c2-53 k=2\n"
        "seeds 7 8\n");
  auto r = run({"bench", "--plan", path("plan.txt"), "--json", "--no-timing", "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    if (j.contains("success_rate")) {
      EXPECT_GE(j["success_rate"].get<double>(), 0.0);
      EXPECT_LE(j["success_rate"].get<double>(), 1.0);
    } else {
      ++records;
      EXPECT_EQ(j["status"], "ok");
    }
  }
  EXPECT_EQ(records, 8u);
}

TEST_F(CliTest, BenchIsByteStableWithoutTiming) {
  const std::string plan = (fs::path(KCENTER_SAMPLE_DATA) / "plan.txt").string();
  const auto a = run({"bench", "--plan", plan, "--no-timing"});
  const auto b = run({"bench", "--plan", plan, "--no-timing", "--threads", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliParsing, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "--algo", "exact"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
