// Copyright 2026 The RelayLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "relaylab/gap.h"
#include "relaylab/rate.h"
#include "relaylab/serialize.h"
#include "relaylab/verification.h"

namespace relaylab::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(const std::vector<std::string>& args) {
  const Outcome o = invoke(args);
  EXPECT_EQ(o.code, kSuccess) << o.err;
  return nlohmann::json::parse(o.out);
}

const std::vector<std::string> kPaperFlags{"--l01", "62000", "--l02", "230",
                                           "--l12", "100000"};

std::vector<std::string> with(std::vector<std::string> head,
                              const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

TEST(CliRate, PaperChannelRatio) {
  const auto j = invoke_json(with({"rate", "--format", "json"}, kPaperFlags));
  const double ratio = j["pdf"]["rate"].get<double>() / j["cdf"]["rate"].get<double>();
  EXPECT_NEAR(ratio - 1.0, 0.122, 0.002);
  EXPECT_TRUE(j.contains("direct"));
}

TEST(CliRate, TableListsEverySchemeByDefault) {
  const Outcome o = invoke(with({"rate"}, kPaperFlags));
  EXPECT_EQ(o.code, kSuccess);
  for (const char* name : {"cdf", "pdf", "direct", "binding"}) {
    EXPECT_NE(o.out.find(name), std::string::npos) << name;
  }
}

TEST(CliRate, EqualRegimeIsDirectRate) {
  const auto j = invoke_json(
      {"rate", "--l01", "1", "--l02", "1", "--l12", "5", "--scheme", "pdf", "--format", "json"});
  EXPECT_NEAR(j["pdf"]["rate"].get<double>(), 0.5, 1e-12);
  EXPECT_FALSE(j.contains("cdf"));
}

TEST(CliRate, CsvMatchesLibraryToPrintedPrecision) {
  const Outcome o = invoke({"rate", "--l01", "10", "--l02", "1", "--l12", "10",
                            "--scheme", "cdf", "--format", "csv"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const RateSolution r = solve_cdf(SnrTriple::make(10, 1, 10));
  const std::string expected = "scheme,rate,alpha,beta,binding\ncdf," +
                               format_number(r.rate) + "," + format_number(r.alpha) +
                               "," + format_number(r.beta) + "," +
                               std::string(to_string(r.binding)) + "\n";
  EXPECT_EQ(o.out, expected);
}

TEST(CliGap, PaperChannelWithBounds) {
  const auto j = invoke_json(with({"gap", "--bounds", "--format", "json"}, kPaperFlags));
  EXPECT_NEAR(j["report"]["g_bar"].get<double>(), 0.122, 0.002);
  EXPECT_TRUE(j["report"]["g_bar_ub"].is_number());
}

TEST(CliGap, DirectRegimeHasZeroGapAndEmptyBounds) {
  const auto j = invoke_json({"gap", "--l01", "1", "--l02", "4", "--l12", "9",
                              "--bounds", "--format", "json"});
  EXPECT_EQ(j["report"]["g_bar"].get<double>(), 0.0);
  EXPECT_TRUE(j["report"]["g_bar_ub"].is_null());
  const Outcome csv = invoke({"gap", "--l01", "1", "--l02", "4", "--l12", "9",
                              "--bounds", "--format", "csv"});
  EXPECT_NE(csv.out.find(",,"), std::string::npos);
}

TEST(CliGap, ChainHoldsThroughCliPath) {
  const auto j = invoke_json({"gap", "--l01", "5000", "--l02", "20", "--l12", "700",
                              "--bounds", "--format", "json", "--precision", "17"});
  const auto& r = j["report"];
  EXPECT_LE(r["g_bar"].get<double>(), r["g_bar_ub"].get<double>());
  EXPECT_LE(r["g_bar_ub"].get<double>(), r["lemma5_bound"].get<double>());
  EXPECT_LE(r["lemma5_bound"].get<double>(), 0.125);
}

TEST(CliGap, ScenarioFile) {
  const auto path = std::filesystem::temp_directory_path() / "relaylab_cli_geom.json";
  std::ofstream(path) << to_json(Geometry{}).dump();
  const auto j = invoke_json({"gap", "--scenario", path.string(), "--format", "json"});
  EXPECT_EQ(j["channel"]["lambda01"].get<double>(), 400.0);
}

TEST(CliUsage, ConflictingAndMissingFlags) {
  const Outcome both = invoke(with({"gap", "--scenario", "x.json"}, kPaperFlags));
  EXPECT_EQ(both.code, kUsageFailure);
  const Outcome missing = invoke({"rate", "--l01", "1", "--l02", "1"});
  EXPECT_EQ(missing.code, kUsageFailure);
  EXPECT_NE(missing.err.find("--l12"), std::string::npos);
  const Outcome negative = invoke({"rate", "--l01", "-1", "--l02", "1", "--l12", "1"});
  EXPECT_EQ(negative.code, kUsageFailure);
  EXPECT_NE(negative.err.find("--l01"), std::string::npos);
  EXPECT_EQ(invoke({"rate", "--l01", "abc"}).code, kUsageFailure);
  EXPECT_EQ(invoke(with({"rate", "--format", "xml"}, kPaperFlags)).code, kUsageFailure);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageFailure);
  EXPECT_EQ(invoke({}).code, kUsageFailure);
}

TEST(CliUsage, HelpExitsCleanly) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, kSuccess);
  EXPECT_NE(o.out.find("search-bound"), std::string::npos);
}

TEST(CliDomain, BadScenarioAndUnwritableOutput) {
  const auto path = std::filesystem::temp_directory_path() / "relaylab_cli_bad.json";
  nlohmann::json g = to_json(Geometry{});
  g["relay"] = g["destination"];
  std::ofstream(path) << g.dump();
  EXPECT_EQ(invoke({"gap", "--scenario", path.string()}).code, kDomainFailure);
  EXPECT_EQ(invoke({"rate", "--scenario", "/nonexistent/s.json"}).code, kDomainFailure);
  EXPECT_EQ(invoke({"sweep", "--step", "0.2", "--out", "/nonexistent/dir/s.csv"}).code,
            kDomainFailure);
  EXPECT_EQ(invoke({"scan-proximity", "--d", "0.1,0.5"}).code, kDomainFailure);
}

TEST(CliSweep, CoarseMaxBoundedByFinerAndPowerMatters) {
  const auto coarse = invoke_json({"sweep", "--step", "0.1", "--format", "json"});
  const auto fine = invoke_json({"sweep", "--step", "0.05", "--format", "json"});
  EXPECT_LE(coarse["max_g_bar"].get<double>(), fine["max_g_bar"].get<double>() + 1e-12);
  const auto louder = invoke_json(
      {"sweep", "--step", "0.05", "--p0", "200", "--p1", "200", "--format", "json"});
  EXPECT_NE(louder["max_g_bar"].get<double>(), fine["max_g_bar"].get<double>());
}

TEST(CliSweep, WritesFilesAndHonoursThreadOverride) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "relaylab_cli_sweep.csv";
  const auto svg = dir / "relaylab_cli_sweep.svg";
  const auto serial = invoke_json({"--threads", "1", "sweep", "--step", "0.1", "--out",
                                   csv.string(), "--svg", svg.string(), "--format", "json"});
  EXPECT_TRUE(std::filesystem::file_size(csv) > 0);
  EXPECT_TRUE(std::filesystem::file_size(svg) > 0);

  ::setenv("RELAYLAB_THREADS", "2", 1);
  const auto env = invoke_json({"sweep", "--step", "0.1", "--threads", "1", "--format", "json"});
  ::unsetenv("RELAYLAB_THREADS");
  EXPECT_EQ(env["max_g_bar"], serial["max_g_bar"]);
  EXPECT_EQ(env["argmax"], serial["argmax"]);
}

TEST(CliScans, PowerAndProximityAndSearch) {
  const auto power = invoke_json({"scan-power", "--p", "1e-6,1e6", "--format", "json"});
  ASSERT_EQ(power["records"].size(), 2u);
  EXPECT_TRUE(power["high_snr_limit_g_ub"].is_number());
  const auto prox = invoke_json(
      {"scan-proximity", "--kind", "destination", "--d", "0.1,0.0001", "--format", "json"});
  EXPECT_LT(prox["records"][1]["report"]["g_bar_ub"].get<double>(), 1e-2);
  const auto search = invoke_json({"search-bound", "--l12", "1000", "--format", "json"});
  ASSERT_EQ(search.size(), 1u);
  EXPECT_GT(search[0]["g_bar"].get<double>(), 0.1);
}

TEST(CliVerify, TheoremAndHSuitesPass) {
  const Outcome theorem =
      invoke({"verify", "--suite", "theorem", "--seed", "42", "--samples", "2000"});
  EXPECT_EQ(theorem.code, kSuccess) << theorem.out;
  const auto j = nlohmann::json::parse(theorem.out);
  EXPECT_LT(j["theorem"]["worst_g_bar"].get<double>(), 0.125);
  EXPECT_EQ(invoke({"verify", "--suite", "h"}).code, kSuccess);
  EXPECT_EQ(invoke({"verify", "--suite", "oracle", "--samples", "5"}).code, kSuccess);
  EXPECT_EQ(invoke({"verify", "--samples", "0"}).code, kUsageFailure);
}

TEST(CliVerify, AsymptoticsExitCodeFollowsLibraryVerdict) {
  const bool pass = asymptotic_checks().pass();
  const Outcome o = invoke({"verify", "--suite", "asymptotics"});
  EXPECT_EQ(o.code, pass ? kSuccess : kVerificationFailure);
  EXPECT_EQ(nlohmann::json::parse(o.out)["pass"].get<bool>(), pass);
}

}  // namespace
}  // namespace relaylab::cli
