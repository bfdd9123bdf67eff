#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace fs = std::filesystem;
using qmswap::cli::ExitCode;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qmswap");
  std::ostringstream out, err;
  const int code = qmswap::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qmswap_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST(Cli, ScanToStdout) {
  const auto r = run({"scan", "--R", "0.1", "--beta", "2e-9", "--omega-ratio", "1.5e9", "--observable",
                      "entropy-avg", "--tau-max", "50", "--tau-steps", "500"});
  ASSERT_EQ(r.code, ExitCode::kSuccess) << r.err;
  EXPECT_EQ(r.out.rfind("tau,entropy_avg\n", 0), 0u);
  EXPECT_EQ(lines(r.out), 502u);
}

TEST(Cli, NeedsSubcommand) {
  EXPECT_EQ(run({}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, ExitCode::kUsageError);
}

TEST(Cli, HelpIsSuccess) { EXPECT_EQ(run({"--help"}).code, ExitCode::kSuccess); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"scan", "--observable", "concurrence"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"scan", "--beta", "0.01"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"scan", "--R", "abc"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"scan", "--nonsense", "1"}).code, ExitCode::kUsageError);
  EXPECT_EQ(run({"figure", "fig4"}).code, ExitCode::kUsageError);
}

TEST(Cli, NumericFailure) {
  const auto r = run({"scan", "--observable", "amplitude", "--method", "oracle", "--ode-step", "0.5", "--beta", "1e-9"});
  EXPECT_EQ(r.code, ExitCode::kNumericFailure);
  EXPECT_NE(r.err.find("StepTooLarge"), std::string::npos) << r.err;
}

TEST(Cli, MissingConfigIsIoError) {
  EXPECT_EQ(run({"scan", "--config", "/nonexistent/qmswap.cfg"}).code, ExitCode::kIoError);
}

TEST_F(CliFiles, ConfigFileWithOverride) {
  {
    std::ofstream cfg(dir_ / "a.cfg");
    cfg << "# amplitude check\nobservable = amplitude\nR = 10\ntau-max = 2\ntau-steps = 4\n";
  }
  const auto out = (dir_ / "a.csv").string();
  const auto r = run({"scan", "--config", (dir_ / "a.cfg").string(), "--tau-steps", "8", "--out", out});
  ASSERT_EQ(r.code, ExitCode::kSuccess) << r.err;
  std::ifstream in(out, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str().rfind("tau,amplitude_re,amplitude_im,population\n", 0), 0u);
  EXPECT_EQ(lines(buf.str()), 10u);
}

TEST_F(CliFiles, UnwritableOutputIsIoError) {
  const auto r = run({"scan", "--tau-steps", "2", "--out", (dir_ / "no" / "such" / "x.csv").string()});
  EXPECT_EQ(r.code, ExitCode::kIoError);
}

TEST_F(CliFiles, FigureWritesEveryCurve) {
  const auto r = run({"figure", "fig6", "--out-dir", dir_.string()});
  ASSERT_EQ(r.code, ExitCode::kSuccess) << r.err;
  EXPECT_EQ(lines(r.out), 2u);
  std::size_t n = 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().extension(), ".csv");
    ++n;
  }
  EXPECT_EQ(n, 2u);
}
