// Drives the built steinernet executable end to end.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "oracles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(STEINERNET_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("steinernet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructAndRatioSrs) {
  ASSERT_EQ(run("construct --family srs --lengths 1 1 1 1 1 1 --out " + path("srs.json")).code, 0);
  const auto r = run("ratio --net " + path("srs.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_LT(oracle::relative_error(doc["ratio"].get<double>(), oracle::kSrsRatio), 1e-12);
  EXPECT_NEAR(doc["margin"].get<double>(), 0.0, 1e-12);
}

TEST_F(Cli, VerifyReportsLagrangeForFamilies) {
  ASSERT_EQ(run("construct --family ths --lengths 1 1 1 1 0.1 0.4 --alpha 1.5707963267948966 --out " +
                path("ths.json"))
                .code,
            0);
  const auto r = run("verify --net " + path("ths.json") + " --require-steiner");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_TRUE(doc["steiner"].get<bool>());
  EXPECT_EQ(doc["family"], "ths");
  EXPECT_LT(doc["lagrange"]["residual"].get<double>(), 1e-14);
  EXPECT_NEAR(doc["length"].get<double>(), 4.5, 1e-12);
  EXPECT_TRUE(doc["validation"]["passed"].get<bool>());
}

TEST_F(Cli, VerifyFailsValidationWithExitTwo) {
  // Shifts spanning only one direction.
  const json doc = {{"dimension", 2},
                    {"generators", {{1, 0}, {0, 1}}},
                    {"vertices", {{0, 0}, {0.5, 0.3}}},
                    {"edges",
                     {{{"tail", 0}, {"head", 1}, {"shift", {0, 0}}}, {{"tail", 1}, {"head", 0}, {"shift", {1, 0}}}}}};
  std::ofstream(path("bad.json")) << doc.dump();
  EXPECT_EQ(run("verify --net " + path("bad.json")).code, 2);
}

TEST_F(Cli, IoAndParseErrorsExitFour) {
  EXPECT_EQ(run("ratio --net " + path("missing.json")).code, 4);
  std::ofstream(path("junk.json")) << "{ not json";
  EXPECT_EQ(run("ratio --net " + path("junk.json")).code, 4);
  std::ofstream(path("bad.conf")) << "colour = red\n";
  EXPECT_EQ(run("--config " + path("bad.conf") + " homotopy --samples 3").code, 4);
}

TEST_F(Cli, InvalidParametersExitTwo) {
  EXPECT_EQ(run("construct --family srs --lengths 1 1 1 1 1 0").code, 2);
  EXPECT_EQ(run("construct --family srs --lengths 1 1 1").code, 2);
  EXPECT_EQ(run("construct --family ths --lengths 1 1 1 1 1 1 --alpha 0").code, 2);
  EXPECT_EQ(run("construct --family pcu --lengths 1").code, 2);
}

TEST_F(Cli, OptimizeSimplexDeterministic) {
  const auto a = run("optimize --mode simplex --family srs --seed 11 --starts 8");
  const auto b = run("optimize --mode simplex --family srs --seed 11 --starts 8");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = json::parse(a.out);
  EXPECT_TRUE(doc["converged"].get<bool>());
  EXPECT_NEAR(doc["objective"].get<double>(), oracle::kSqrt2 / 27, 1e-12);
}

TEST_F(Cli, OptimizeNonConvergenceExitsThree) {
  EXPECT_EQ(run("optimize --mode simplex --family ths --max-iter 1 --starts 1").code, 3);
}

TEST_F(Cli, OptimizeEmbeddingFromNetwork) {
  ASSERT_EQ(run("construct --family hex --lengths 1 1 1 --out " + path("hex.json")).code, 0);
  auto doc = json::parse(slurp(path("hex.json")));
  doc["vertices"][1] = {0.3, 0.2};  // move away from the optimum
  std::ofstream(path("start.json")) << doc.dump();
  const auto r = run("optimize --mode embedding --net " + path("start.json") + " --lattice " + path("hex.json"));
  ASSERT_EQ(r.code, 0);
  const auto report = json::parse(r.out);
  EXPECT_LT(oracle::relative_error(report["ratio"].get<double>(), oracle::kHexRatio), 1e-6);
}

TEST_F(Cli, HomotopyProfileAndFrames) {
  const auto r = run("homotopy --xi 0.25 --samples 9 --out " + path("profile.json") + " --export-frames " +
                     path("frames"));
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(slurp(path("profile.json")));
  ASSERT_EQ(doc["profile"].size(), 9u);
  EXPECT_NEAR(doc["profile"][0]["length"].get<double>(), 4.5, 1e-12);
  int frames = 0;
  for (const auto& entry : fs::directory_iterator(path("frames"))) frames += entry.path().extension() == ".json";
  EXPECT_EQ(frames, 9);
  EXPECT_EQ(run("ratio --net " + (fs::path(path("frames")) / "frame_0008.json").string()).code, 0);
}

TEST_F(Cli, ExportObj) {
  ASSERT_EQ(run("construct --family srs --lengths 1 1 1 1 1 1 --out " + path("srs.json")).code, 0);
  ASSERT_EQ(run("export --net " + path("srs.json") + " --cells 2 --out " + path("a.obj")).code, 0);
  ASSERT_EQ(run("export --net " + path("srs.json") + " --cells 2 2 2 --out " + path("b.obj")).code, 0);
  const std::string a = slurp(path("a.obj"));
  EXPECT_EQ(a, slurp(path("b.obj")));
  int lines = 0;
  std::istringstream in(a);
  std::string line;
  while (std::getline(in, line)) lines += line.rfind("l ", 0) == 0;
  EXPECT_EQ(lines, 48);
}

TEST_F(Cli, PrecisionAndConfig) {
  std::ofstream(path("tool.conf")) << "precision = 6\nseed = 5\n";
  const auto r = run("--config " + path("tool.conf") + " construct --family hex --lengths 1 2 3");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  const double v = doc["vertices"][1][0].get<double>();
  EXPECT_EQ(v, std::stod(std::to_string(v).substr(0, 8)));
  const auto full = json::parse(run("--precision 17 construct --family hex --lengths 1 2 3").out);
  const auto six = json::parse(run("--precision 6 construct --family hex --lengths 1 2 3").out);
  EXPECT_NE(full.dump(), six.dump());
  EXPECT_EQ(run("--precision 4 construct --family hex --lengths 1 2 3").code, 2);
}
