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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "relaylab/errors.h"

namespace relaylab {
namespace {

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

double number_field(const Json& j, const char* name) {
  if (!j.contains(name)) {
    throw DomainError(std::string("missing field \"") + name + "\"");
  }
  const Json& v = j.at(name);
  if (!v.is_number()) {
    throw DomainError(std::string("field \"") + name + "\" must be a number");
  }
  return v.get<double>();
}

Point point_field(const Json& j, const char* name) {
  if (!j.contains(name)) {
    throw DomainError(std::string("missing field \"") + name + "\"");
  }
  const Json& v = j.at(name);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    throw DomainError(std::string("field \"") + name +
                      "\" must be an [x, y] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

void require_object(const Json& j) {
  if (!j.is_object()) throw DomainError("scenario must be a JSON object");
}

}  // namespace

Json to_json(const Point& p) { return Json::array({p.x, p.y}); }

Json to_json(const Geometry& g) {
  return Json{{"source", to_json(g.source)},
              {"relay", to_json(g.relay)},
              {"destination", to_json(g.destination)},
              {"p0", g.p0},
              {"p1", g.p1},
              {"n1", g.n1},
              {"n2", g.n2}};
}

Json to_json(const SnrTriple& s) {
  return Json{{"lambda01", s.lambda01()},
              {"lambda02", s.lambda02()},
              {"lambda12", s.lambda12()}};
}

Json to_json(const RateSolution& r) {
  return Json{{"rate", r.rate},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"binding", std::string(to_string(r.binding))}};
}

Json to_json(const GapReport& r) {
  return Json{{"r_cdf", r.r_cdf},
              {"r_pdf", r.r_pdf},
              {"r_pdf_ub", optional_json(r.r_pdf_ub)},
              {"g", r.g},
              {"g_bar", r.g_bar},
              {"g_bar_ub", optional_json(r.g_bar_ub)},
              {"lemma5_bound", optional_json(r.lemma5_bound)},
              {"g_ub", optional_json(r.g_ub)},
              {"regime", std::string(to_string(r.regime))}};
}

Json to_json(const FuzzSummary& f) {
  Json violations = Json::array();
  for (const auto& v : f.violations) {
    violations.push_back(
        {{"sample", v.sample}, {"channel", to_json(v.snr)}, {"check", v.what}});
  }
  return Json{{"seed", f.seed},
              {"samples", f.samples},
              {"violations", f.violations.size()},
              {"violation_details", violations},
              {"worst_g_bar", f.worst_g_bar},
              {"worst_channel",
               f.worst_channel ? to_json(*f.worst_channel) : Json(nullptr)}};
}

Json to_json(const BoundSearchRecord& r) {
  return Json{{"lambda12", r.lambda12},
              {"lambda01", r.lambda01},
              {"lambda02", r.lambda02},
              {"g_bar", r.g_bar}};
}

Json sweep_summary_json(const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  return Json{
      {"spec",
       {{"base", to_json(spec.base)},
        {"x_range", {spec.x_min, spec.x_max}},
        {"y_range", {spec.y_min, spec.y_max}},
        {"step", spec.step},
        {"unit_disk_filter", spec.unit_disk_filter},
        {"seed", spec.seed}}},
      {"grid_points", result.grid_points},
      {"records", result.records.size()},
      {"max_g_bar", result.max_g_bar},
      {"argmax", to_json(result.argmax)},
      {"runtime_seconds", result.runtime_seconds}};
}

Geometry geometry_from_json(const Json& j) {
  require_object(j);
  Geometry g;
  g.source = point_field(j, "source");
  g.relay = point_field(j, "relay");
  g.destination = point_field(j, "destination");
  g.p0 = number_field(j, "p0");
  g.p1 = number_field(j, "p1");
  g.n1 = number_field(j, "n1");
  g.n2 = number_field(j, "n2");
  validate(g);
  return g;
}

SnrTriple snr_from_json(const Json& j) {
  require_object(j);
  return SnrTriple::make(number_field(j, "lambda01"),
                         number_field(j, "lambda02"),
                         number_field(j, "lambda12"));
}

Scenario scenario_from_json(const Json& j) {
  require_object(j);
  if (j.contains("lambda01")) return snr_from_json(j);
  return geometry_from_json(j);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open scenario file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("scenario file " + path + " is not valid JSON: " +
                      e.what());
  }
  return scenario_from_json(j);
}

std::string format_number(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
  return buf;
}

std::string format_optional(const std::optional<double>& value, int precision) {
  return value ? format_number(*value, precision) : std::string();
}

std::string gap_report_csv_header() {
  return "r_cdf,r_pdf,r_pdf_ub,g,g_bar,g_bar_ub,lemma5_bound,g_ub,regime";
}

std::string gap_report_csv_row(const GapReport& r, int precision) {
  std::string row;
  row += format_number(r.r_cdf, precision) + ",";
  row += format_number(r.r_pdf, precision) + ",";
  row += format_optional(r.r_pdf_ub, precision) + ",";
  row += format_number(r.g, precision) + ",";
  row += format_number(r.g_bar, precision) + ",";
  row += format_optional(r.g_bar_ub, precision) + ",";
  row += format_optional(r.lemma5_bound, precision) + ",";
  row += format_optional(r.g_ub, precision) + ",";
  row += std::string(to_string(r.regime));
  return row;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     int precision) {
  out << "x1,y1,lambda01,lambda02,lambda12,r_cdf,r_pdf,g,g_bar\n";
  for (const SweepRecord& rec : result.records) {
    out << format_number(rec.relay.x, precision) << ','
        << format_number(rec.relay.y, precision) << ','
        << format_number(rec.snr.lambda01(), precision) << ','
        << format_number(rec.snr.lambda02(), precision) << ','
        << format_number(rec.snr.lambda12(), precision) << ','
        << format_number(rec.report.r_cdf, precision) << ','
        << format_number(rec.report.r_pdf, precision) << ','
        << format_number(rec.report.g, precision) << ','
        << format_number(rec.report.g_bar, precision) << '\n';
  }
}

void write_sweep_svg(std::ostream& out, const SweepResult& result,
                     double scale_max) {
  const SweepSpec& spec = result.spec;
  constexpr double kPixelsPerUnit = 400.0;
  const double width = (spec.x_max - spec.x_min + spec.step) * kPixelsPerUnit;
  const double height = (spec.y_max - spec.y_min + spec.step) * kPixelsPerUnit;
  const double cell = spec.step * kPixelsPerUnit;

  auto channel = [](double from, double to, double f) {
    return static_cast<int>(std::lround(from + (to - from) * f));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << format_number(width, 8) << "\" height=\"" << format_number(height, 8)
      << "\">\n";
  out << "<title>normalized gap, max " << format_number(result.max_g_bar, 6)
      << " at (" << format_number(result.argmax.x, 6) << ", "
      << format_number(result.argmax.y, 6) << ")</title>\n";
  for (const SweepRecord& rec : result.records) {
    const double f =
        std::clamp(scale_max > 0.0 ? rec.report.g_bar / scale_max : 0.0, 0.0, 1.0);
    const double px = (rec.relay.x - spec.x_min) * kPixelsPerUnit;
    const double py = (spec.y_max - rec.relay.y) * kPixelsPerUnit;
    char color[8];
    std::snprintf(color, sizeof(color), "#%02x%02x%02x", channel(255, 178, f),
                  channel(255, 24, f), channel(255, 43, f));
    out << "<rect x=\"" << format_number(px, 8) << "\" y=\""
        << format_number(py, 8) << "\" width=\"" << format_number(cell, 8)
        << "\" height=\"" << format_number(cell, 8) << "\" fill=\"" << color
        << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace relaylab
