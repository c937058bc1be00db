#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cesaro/cli.hpp"
#include "config.hpp"

using cesaro::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyNuclear) {
  auto r = run({"classify", "--alpha", "preset:n", "--no-evidence", "--horizon", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "cesaro_lab/classify/v1");
  EXPECT_EQ(j["tool_version"], "0.1.0");
  EXPECT_EQ(j["horizon"], 10000);
  EXPECT_EQ(j["result"]["sigma"], "Sigma");
  EXPECT_EQ(j["result"]["sigma_star"], "Sigma0");
  EXPECT_EQ(j["config_hash"].get<std::string>().size(), 16u);
}

TEST(Cli, ClassifySlowWeights) {
  auto r = run({"classify", "--alpha", "preset:logloglog_n", "--no-evidence"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["sigma_pt"], "{1}");
  EXPECT_EQ(j["result"]["sigma"], "closure(D(1))");
}

TEST(Cli, ShortFileIsInconclusive) {
  std::string path = ::testing::TempDir() + "short_alpha.csv";
  std::ofstream(path) << "n,alpha_n\n1,1\n2,2\n3,3.5\n";
  auto r = run({"classify", "--alpha", "file:" + path, "--no-evidence"});
  EXPECT_EQ(r.code, 2) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["status"], "inconclusive");
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({"classify", "--alpha", "preset:nope"}).code, 1);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 1);
  EXPECT_EQ(run({"grid", "--res", "0"}).code, 1);
  EXPECT_NE(run({"frobnicate"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifySuitesPass) {
  for (std::string s : {"factorizations", "eigen", "resolvent"}) {
    auto r = run({"verify", "--suite", s});
    EXPECT_EQ(r.code, 0) << s << r.err;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["result"]["passed"].get<bool>()) << s;
  }
}

TEST(Cli, Deterministic) {
  std::vector<std::string> g = {"grid", "--alpha", "preset:loglog_n", "--res", "40", "--probe-subsample", "5",
                                "--probe-horizon", "10000", "--horizon", "10000"};
  auto a = run(g);
  g.insert(g.end(), {"--threads", "4"});
  auto b = run(g);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> c = {"classify", "--alpha", "preset:sqrt_n", "--evidence-horizon", "10000"};
  EXPECT_EQ(run(c).out, run(c).out);
}

TEST(Cli, GridHeader) {
  auto r = run({"grid", "--alpha", "preset:n", "--res", "3", "--probe-subsample", "0", "--horizon", "1000"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# schema=cesaro_lab/grid/v1\n# tool_version=0.1.0\n# config_hash=", 0), 0u);
  EXPECT_NE(r.out.find("\nre,im,region_label,probe_status,probe_sup,l_found\n"), std::string::npos);
}

TEST(Cli, ConfigHashIgnoresOutput) {
  std::string path = ::testing::TempDir() + "classify_out.json";
  auto a = run({"classify", "--alpha", "preset:n", "--no-evidence", "--horizon", "1000"});
  auto b = run({"classify", "--alpha", "preset:n", "--no-evidence", "--horizon", "1000", "--out", path});
  ASSERT_EQ(b.code, 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(file.str());
  EXPECT_EQ(ja["config_hash"], jb["config_hash"]);
  auto c = run({"classify", "--alpha", "preset:n", "--no-evidence", "--horizon", "2000"});
  EXPECT_NE(ja["config_hash"], nlohmann::json::parse(c.out)["config_hash"]);
}

TEST(Cli, Fnv1aKnownValues) {
  EXPECT_EQ(cesaro::cli::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(cesaro::cli::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Cli, ProbeAndFinite) {
  auto p = run({"probe", "--alpha", "preset:n", "--lambda", "0.4,0.2", "--horizon", "100000"});
  EXPECT_EQ(p.code, 0) << p.err;
  auto f = run({"finite", "--weights", "finite:log_np1", "--k-probe", "2"});
  EXPECT_EQ(f.code, 0) << f.err;
  auto e = run({"ergodic", "--alpha", "preset:n", "--x", "e1"});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("m,distance\n"), std::string::npos);
}
