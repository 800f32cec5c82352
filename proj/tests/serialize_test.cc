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

#include "relaylab/serialize.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "relaylab/errors.h"
#include "relaylab/experiments.h"
#include "relaylab/gap.h"

namespace relaylab {
namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(Json, GeometryRoundTrip) {
  Geometry g;
  g.relay = {0.25, -0.1};
  g.p1 = 42.0;
  g.n2 = 0.5;
  EXPECT_EQ(geometry_from_json(to_json(g)), g);
}

TEST(Json, SnrRoundTrip) {
  const SnrTriple s = SnrTriple::make(62000, 230, 1e5);
  EXPECT_EQ(snr_from_json(to_json(s)), s);
}

TEST(Json, ScenarioPicksRepresentation) {
  const Scenario snr = scenario_from_json(
      Json{{"lambda01", 3.0}, {"lambda02", 1.0}, {"lambda12", 2.0}});
  EXPECT_TRUE(std::holds_alternative<SnrTriple>(snr));
  const Scenario geo = scenario_from_json(to_json(Geometry{}));
  EXPECT_TRUE(std::holds_alternative<Geometry>(geo));
}

TEST(Json, MalformedScenariosAreDomainErrors) {
  EXPECT_THROW(scenario_from_json(Json::array()), DomainError);
  EXPECT_THROW(scenario_from_json(Json{{"lambda01", 1.0}}), DomainError);
  EXPECT_THROW(
      scenario_from_json(Json{{"lambda01", "x"}, {"lambda02", 1}, {"lambda12", 1}}),
      DomainError);
  Json coincident = to_json(Geometry{});
  coincident["relay"] = coincident["destination"];
  EXPECT_THROW(scenario_from_json(coincident), DomainError);
}

TEST(Json, LoadScenarioFromFile) {
  const auto ok = write_temp("relaylab_ok.json",
                             R"({"lambda01": 10, "lambda02": 1, "lambda12": 10})");
  EXPECT_EQ(std::get<SnrTriple>(load_scenario(ok.string())),
            SnrTriple::make(10, 1, 10));
  const auto broken = write_temp("relaylab_broken.json", "{not json");
  EXPECT_THROW(load_scenario(broken.string()), DomainError);
  EXPECT_THROW(load_scenario("/nonexistent/relaylab.json"), DomainError);
}

TEST(Json, GapReportUsesNullForAbsentBounds) {
  const Json direct = to_json(gap_report(SnrTriple::make(1, 2, 3)));
  EXPECT_TRUE(direct["g_bar_ub"].is_null());
  EXPECT_EQ(direct["regime"], "DirectAdvantaged");
  const Json relay = to_json(gap_report(SnrTriple::make(10, 1, 10)));
  EXPECT_TRUE(relay["g_bar_ub"].is_number());
}

TEST(Format, NumberAndOptional) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0, 4), "0.3333");
  EXPECT_EQ(format_number(1e-7, 3), "1e-07");
  EXPECT_EQ(format_optional(std::nullopt), "");
  EXPECT_EQ(format_optional(0.25), "0.25");
}

TEST(Csv, GapRowAlignsWithHeader) {
  const std::string header = gap_report_csv_header();
  const std::string relay = gap_report_csv_row(gap_report(SnrTriple::make(10, 1, 10)));
  const std::string direct = gap_report_csv_row(gap_report(SnrTriple::make(1, 2, 3)));
  EXPECT_EQ(count_of(header, ","), count_of(relay, ","));
  EXPECT_EQ(count_of(header, ","), count_of(direct, ","));
  EXPECT_NE(direct.find(",,"), std::string::npos);
  EXPECT_NE(relay.rfind("RelayAdvantaged"), std::string::npos);
}

TEST(SweepExport, CsvAndSvgCoverEveryRecord) {
  SweepSpec spec;
  spec.step = 0.1;
  const SweepResult r = position_sweep(spec);
  std::ostringstream csv;
  write_sweep_csv(csv, r);
  EXPECT_EQ(count_of(csv.str(), "\n"), r.records.size() + 1);
  EXPECT_EQ(csv.str().rfind("x1,y1,lambda01", 0), 0u);

  std::ostringstream svg;
  write_sweep_svg(svg, r);
  EXPECT_EQ(svg.str().rfind("<svg", 0), 0u);
  EXPECT_EQ(count_of(svg.str(), "<rect"), r.records.size());

  const Json summary = sweep_summary_json(r);
  EXPECT_EQ(summary["records"], r.records.size());
  EXPECT_EQ(summary["max_g_bar"], r.max_g_bar);
}

}  // namespace
}  // namespace relaylab
