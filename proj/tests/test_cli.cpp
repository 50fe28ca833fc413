#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(SIGCOLOR_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) {
  return ::testing::TempDir() + "sigcolor_" + name;
}

}  // namespace

TEST(Cli, BuildWPrime) {
  const CliRun r = run("build w-prime");
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["vertices"].size(), 16U);
  EXPECT_EQ(doc["marked_triangles"].size(), 7U);
}

TEST(Cli, ReproduceListsTenBlocks) {
  const CliRun r = run("reproduce lemma-3.1");
  EXPECT_EQ(r.code, 0);
  for (int i = 1; i <= 10; ++i) {
    EXPECT_NE(r.out.find("B" + std::to_string(i) + " = {u,v"), std::string::npos) << i;
  }
}

TEST(Cli, VerifyCorruptedCertificateFails) {
  std::ifstream in(std::string(SIGCOLOR_DATA_DIR) + "/wheel_83_41_tight.json");
  json cert = json::parse(in);
  cert["classes"][0]["set"] = {"w", "x1", "x2"};
  const std::string path = tmp("bad.json");
  std::ofstream(path) << cert.dump();
  const CliRun r = run("verify w-hat " + path);
  EXPECT_EQ(r.code, 1);
  const json doc = json::parse(r.out);
  EXPECT_FALSE(doc["ok"].get<bool>());
  EXPECT_FALSE(doc["findings"].empty());
  EXPECT_EQ(run("verify w-hat wheel_83_41_tight").code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("build nothing").code, 2);
  EXPECT_EQ(run("verify /no/such/graph.json wheel_172_85").code, 2);
  EXPECT_EQ(run("build g-seq --i 5").code, 3);
  EXPECT_EQ(run("enumerate w-double-prime").code, 3);
  EXPECT_EQ(run("bounds mu --p 9 --q 2").code, 2);
}

TEST(Cli, GraphFilesRoundTrip) {
  const std::string path = tmp("k4.json");
  ASSERT_EQ(run("build k4-minus -o " + path).code, 0);
  const CliRun r = run("solve chi-fb " + path);
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["optimum"], "2");
  EXPECT_TRUE(doc["check"]["strong_duality"].get<bool>());
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  const std::string a = run("compose-8341 --random-depth 3 --seed 4").out;
  EXPECT_EQ(a, run("compose-8341 --random-depth 3 --seed 4 --threads 3").out);
  EXPECT_NE(a, run("compose-8341 --random-depth 3 --seed 5").out);
  EXPECT_EQ(run("enumerate w-prime --maximal --contains u,v").out,
            run("enumerate w-prime --maximal --contains u,v --threads 4").out);
  EXPECT_EQ(run("reproduce all --json").out, run("reproduce all --json").out);
}

TEST(Cli, BoundsAndChecks) {
  const json t = json::parse(run("bounds thresholds").out);
  EXPECT_EQ(t["threshold_83_41"], "83/41");
  EXPECT_EQ(t["threshold_172_85"], "172/85");
  EXPECT_EQ(t["threshold_52_25"], "52/25");
  const json mu = json::parse(run("bounds mu --p 2 --q 1").out);
  EXPECT_EQ(mu["first_infeasible_index"], 1);
  EXPECT_TRUE(json::parse(run("bounds mu --p 83 --q 41").out)["first_infeasible_index"].is_null());
  EXPECT_EQ(run("check lemma-3.1").code, 0);
  EXPECT_EQ(run("check forest-lemmas").code, 0);
  EXPECT_EQ(run("check triangle-signs --construction u-hat").code, 0);
}

TEST(Cli, AuditTriangle) {
  const CliRun ok = run("audit-triangle wheel_172_85 --triangle w,x1,x2 --sign - --threshold 4");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)["missing"], 4);
  EXPECT_EQ(run("audit-triangle wheel_172_85 --triangle w,x1,x2").code, 1);
  EXPECT_EQ(run("audit-triangle wheel_172_85 --triangle w,x1").code, 2);
}
