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

// JSON, CSV and SVG encodings.
//
// Scenario files are JSON objects holding either a Geometry
//   {"source": [x, y], "relay": [x, y], "destination": [x, y],
//    "p0": ..., "p1": ..., "n1": ..., "n2": ...}
// or an SnrTriple
//   {"lambda01": ..., "lambda02": ..., "lambda12": ...}.
// CSV numbers use %.<precision>g with 12 significant digits by default;
// absent bounds are empty cells in CSV and null in JSON.

#ifndef RELAYLAB_SERIALIZE_H_
#define RELAYLAB_SERIALIZE_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "relaylab/channel.h"
#include "relaylab/experiments.h"
#include "relaylab/gap.h"
#include "relaylab/rate.h"

namespace relaylab {

using Json = nlohmann::json;

inline constexpr int kDefaultPrecision = 12;

Json to_json(const Point& p);
Json to_json(const Geometry& g);
Json to_json(const SnrTriple& s);
Json to_json(const RateSolution& r);
Json to_json(const GapReport& r);
Json to_json(const FuzzSummary& f);
Json to_json(const BoundSearchRecord& r);

// Summary of a sweep: spec echo, grid size, record count, maximum and
// runtime. Records go to CSV.
Json sweep_summary_json(const SweepResult& result);

// Throw DomainError on missing or mistyped fields and on values violating the
// type's invariants.
Geometry geometry_from_json(const Json& j);
SnrTriple snr_from_json(const Json& j);

using Scenario = std::variant<Geometry, SnrTriple>;
Scenario scenario_from_json(const Json& j);
Scenario load_scenario(const std::string& path);

std::string format_number(double value, int precision = kDefaultPrecision);
std::string format_optional(const std::optional<double>& value,
                            int precision = kDefaultPrecision);

// Column order: r_cdf, r_pdf, r_pdf_ub, g, g_bar, g_bar_ub, lemma5_bound,
// g_ub, regime.
std::string gap_report_csv_header();
std::string gap_report_csv_row(const GapReport& r,
                               int precision = kDefaultPrecision);

// Columns: x1, y1, lambda01, lambda02, lambda12, r_cdf, r_pdf, g, g_bar.
void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     int precision = kDefaultPrecision);

// One rectangle per record, side = grid step, filled on a linear scale from
// white (#ffffff) at g_bar = 0 to dark red (#b2182b) at g_bar = scale_max,
// clamped at both ends. The y axis points up.
void write_sweep_svg(std::ostream& out, const SweepResult& result,
                     double scale_max = 0.125);

}  // namespace relaylab

#endif  // RELAYLAB_SERIALIZE_H_
