#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "curvecount/cli.hpp"
#include "curvecount/io.hpp"

using curvecount::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = curvecount::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "curvecount_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, MacMahon) {
  const Result r = run({"macmahon", "--order", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1, 1, 3, 6\n");
  const Result j = run({"macmahon", "--order", "4", "--format", "json"});
  EXPECT_EQ(Json::parse(j.out)["coefficients"], Json::parse(R"(["1","1","3","6","13"])"));
  EXPECT_EQ(Json::parse(j.out)["schema"], 1);
}

TEST(Cli, Dt0) {
  const Result r = run({"dt0", "--chi", "2", "--order", "2"});
  EXPECT_EQ(r.out, "1, -2, 7\n");
  const Json j = Json::parse(run({"dt0", "--chi", "1", "--order", "2", "--format", "json"}).out);
  EXPECT_EQ(j["N"], Json::parse(R"(["-1","-5/4"])"));
}

TEST(Cli, Checks) {
  const Result dt0 = run({"check", "--case", "dt0-identity", "--chi", "1", "--order", "6"});
  EXPECT_EQ(dt0.code, 0);
  EXPECT_EQ(dt0.out, "OK\n");
  EXPECT_EQ(run({"check", "--case", "dtpt", "--chi", "10", "--cutoff", "2"}).out, "OK\n");
  EXPECT_EQ(run({"check", "--case", "gw-dt", "--cutoff", "3", "--lambda-order", "10"}).out, "OK\n");
  EXPECT_EQ(run({"check", "--case", "nonsense"}).code, 2);
}

TEST(Cli, HallSuperrigid) {
  const Result r = run({"hall", "superrigid", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["N"], "1/4");
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(run({"hall", "superrigid", "--k", "3", "--format", "text"}).out, "N = 1/9\n");
  EXPECT_NE(run({"hall", "superrigid", "--k", "2", "--format", "text", "--show-t-function"})
                .out.find("(t^2-1) P_t"),
            std::string::npos);
}

TEST(Cli, A2) {
  EXPECT_EQ(Json::parse(run({"a2", "--phi1", "3/4", "--phi2", "1/4"}).out)["count"], 1);
  EXPECT_EQ(run({"hall", "a2", "--phi1", "1/2", "--phi2", "1/2", "--format", "text"}).out, "2\n");
  EXPECT_EQ(run({"a2", "--phi1", "1/4", "--phi2", "3/4", "--format", "text"}).out, "0\n");
  const Result bad = run({"a2", "--phi1", "3/2", "--phi2", "1/4"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("outside (0,1]"), std::string::npos);
  EXPECT_EQ(run({"a2", "--phi1", "1/0", "--phi2", "1/4"}).code, 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"macmahon", "--order", "3", "--bogus"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"macmahon"}).code, 2);
  EXPECT_EQ(run({"macmahon", "--order", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"conifold", "--cutoff", "0"}).code, 2);
  EXPECT_EQ(run({"conifold", "--q-window", "5", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, WindowUnderflowExitsOne) {
  const Result r = run({"pade", "--input", fixture("truncated_series.json"), "--beta", "1",
                        "--num-deg", "1", "--den-deg", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "error: window underflow: requested [1,5], valid [1,2]\n");
}

TEST(Cli, MalformedInputExitsTwo) {
  const Result r = run({"gv-extract", "--input", fixture("bad_rational.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("$.terms[0].q.1"), std::string::npos) << r.err;
  EXPECT_EQ(run({"gv-extract", "--input", fixture("bad_key.json")}).code, 2);
  EXPECT_EQ(run({"gv-extract", "--input", fixture("missing.json")}).code, 2);
}

TEST(Cli, ExpandExtractPipeline) {
  const auto dir = temp_dir();
  const std::string series = (dir / "mixed.json").string();
  const Result e = run({"gv-expand", "--input", fixture("mixed_gv.json"), "--cutoff", "3",
                        "--q-window", "-6", "16", "--output", series});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_TRUE(e.out.empty());
  const Result x = run({"gv-extract", "--input", series, "--g-max", "3", "--format", "csv"});
  ASSERT_EQ(x.code, 0) << x.err;
  EXPECT_EQ(x.out, "g,beta,n\n0,1;0,3\n1,1;1,-2\n2,0;2,5\n");
  const Json full = Json::parse(run({"gv-extract", "--input", series}).out);
  EXPECT_EQ(full["gv"], curvecount::io::read_json_file(fixture("mixed_gv.json")));
  // g_max below the data is an integrality error.
  EXPECT_EQ(run({"gv-extract", "--input", series, "--g-max", "1"}).code, 1);
}

TEST(Cli, PadeOnConifold) {
  const Result r = run({"pade", "--input", fixture("conifold_pt.json"), "--beta", "1",
                        "--num-deg", "1", "--den-deg", "2", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "(q)/(1 + 2*q + q^2)\nsymmetric: yes\n");
}

TEST(Cli, GwTable) {
  const Json j = Json::parse(
      run({"gw", "--input", fixture("conifold_gv.json"), "--cutoff", "2", "--lambda-order", "2"}).out);
  EXPECT_EQ(j["terms"][1]["beta"], Json::parse("[2]"));
  EXPECT_EQ(j["terms"][1]["lambda"]["-2"], "1/8");
  EXPECT_EQ(j["terms"][1]["lambda"]["2"], "1/120");
}

TEST(Cli, ConifoldText) {
  const Result r = run({"conifold", "--chi", "10", "--reduced", "--cutoff", "1", "--q-window",
                        "0", "3", "--format", "text"});
  EXPECT_EQ(r.out, "t^(0): 1  [0,inf]\nt^(1): q - 2*q^2 + 3*q^3  [0,3]\n");
}

TEST(Cli, DegreeCapFromEnvironment) {
  ::setenv("CURVECOUNT_MAX_DEGREE", "5", 1);
  const Result capped = run({"macmahon", "--order", "6"});
  const Result fine = run({"macmahon", "--order", "5"});
  ::unsetenv("CURVECOUNT_MAX_DEGREE");
  EXPECT_EQ(capped.code, 1);
  EXPECT_NE(capped.err.find("CURVECOUNT_MAX_DEGREE=5"), std::string::npos);
  EXPECT_EQ(fine.code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"gv-expand", "--input", fixture("mixed_gv.json"),
                                         "--cutoff", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto dir = temp_dir();
  run({"hall", "superrigid", "--k", "4", "--output", (dir / "a.json").string()});
  run({"hall", "superrigid", "--k", "4", "--output", (dir / "b.json").string()});
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
}
