#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rankfuse/errors.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(RANKFUSE_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rankfuse_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, AggregateWorkedExample) {
  put(path("r.txt"), "1,2,4,3,5\n2,1,3,4,5\n");
  const CliRun r = run("aggregate --rankings " + path("r.txt"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\nconsensus=1,2,3,4,5\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nobjective=4\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ties:2x2 candidates:4 optimal:4"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.rfind("# ", 0), 0u);
}

TEST_F(Cli, AggregateBaselineToFile) {
  put(path("r.txt"), "1,2,4,3,5\n2,1,3,4,5\n");
  put(path("w.txt"), "1\n3\n");
  const CliRun r = run("aggregate --rankings " + path("r.txt") + " --weights " + path("w.txt") +
                    " --algorithm borda --output " + path("out/result.txt"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(slurp(path("out/result.txt")).find("consensus=2,1,3,4,5"), std::string::npos);
}

TEST_F(Cli, BenchIsByteIdenticalForAFixedSeed) {
  const std::string common =
      " --n-rankings 4 --m-objects 6 --iterations 5 --seed 7 --algorithms borda,proposed,mc4";
  ASSERT_EQ(run("bench" + common + " --threads 1 --output-dir " + path("a")).status, 0);
  ASSERT_EQ(run("bench" + common + " --threads 3 --output-dir " + path("b")).status, 0);
  const std::string curves = slurp(path("a/curves.csv"));
  EXPECT_EQ(curves, slurp(path("b/curves.csv")));
  EXPECT_EQ(slurp(path("a/auc.csv")), slurp(path("b/auc.csv")));
  EXPECT_NE(curves.find("seed=7"), std::string::npos);
  EXPECT_NE(curves.find("\nalgorithm,sigma,mean_similarity\n"), std::string::npos);
}

TEST_F(Cli, CrowdUniformWeightsMatchesMajority) {
  put(path("labels.csv"),
      "worker,item,label\na,1,1\nb,1,0\nc,1,1\na,2,0\nb,2,0\nc,2,1\na,3,1\nb,3,1\nc,3,0\n");
  put(path("gold.csv"), "item,label\n1,1\n2,0\n3,0\n");
  const CliRun r = run("crowd --labels " + path("labels.csv") + " --gold " + path("gold.csv") +
                    " --uniform-weights --output-dir " + path("out"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("majority_accuracy=0.6666666666666666\nproposed_accuracy=0.6666666666666666\n"),
            std::string::npos)
      << r.out;
  const std::string csv = slurp(path("out/annotators.csv"));
  EXPECT_NE(csv.find("worker,rank,weight,accuracy,specificity,sensitivity,precision\n"),
            std::string::npos);
  EXPECT_NE(csv.find("\na,"), std::string::npos);
}

TEST_F(Cli, Metrics) {
  put(path("r.txt"), "1,2,4,3,5\n2,1,3,4,5\n");
  const CliRun r = run("metrics --rankings " + path("r.txt") + " --pair 0 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("footrule=4\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("kendall=2\n"), std::string::npos) << r.out;
}

TEST_F(Cli, ExitCodes) {
  EXPECT_NE(run("aggregate --rankings " + path("r.txt") + " --no-such-flag").status, 0);
  EXPECT_NE(run("").status, 0);
  put(path("dup.txt"), "1,2,2\n");
  EXPECT_EQ(run("aggregate --rankings " + path("dup.txt")).status,
            rankfuse::exit_code(rankfuse::ErrorCode::DuplicateObject));
  put(path("r.txt"), "1,2,3\n1,2\n");
  EXPECT_EQ(run("aggregate --rankings " + path("r.txt")).status,
            rankfuse::exit_code(rankfuse::ErrorCode::UniverseMismatch));
  put(path("ok.txt"), "1,2,3\n");
  EXPECT_EQ(run("aggregate --rankings " + path("ok.txt") + " --alpha 2").status,
            rankfuse::exit_code(rankfuse::ErrorCode::InvalidConfig));
}
