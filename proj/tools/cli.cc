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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "relaylab/channel.h"
#include "relaylab/errors.h"
#include "relaylab/experiments.h"
#include "relaylab/gap.h"
#include "relaylab/rate.h"
#include "relaylab/serialize.h"
#include "relaylab/verification.h"

namespace relaylab::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kTable, kJson, kCsv };

struct OutputFlags {
  std::string format = "table";
  int precision = kDefaultPrecision;

  Format parsed() const {
    if (format == "json") return Format::kJson;
    if (format == "csv") return Format::kCsv;
    return Format::kTable;
  }
};

void add_output_flags(CLI::App* sub, OutputFlags& f) {
  sub->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--precision", f.precision, "Significant digits in table/csv")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
}

struct ChannelFlags {
  double l01 = 0.0;
  double l02 = 0.0;
  double l12 = 0.0;
  std::string scenario;
  CLI::Option* l01_opt = nullptr;
  CLI::Option* l02_opt = nullptr;
  CLI::Option* l12_opt = nullptr;
  CLI::Option* scenario_opt = nullptr;
};

void add_channel_flags(CLI::App* sub, ChannelFlags& f) {
  f.l01_opt = sub->add_option("--l01", f.l01, "SNR source->relay");
  f.l02_opt = sub->add_option("--l02", f.l02, "SNR source->destination");
  f.l12_opt = sub->add_option("--l12", f.l12, "SNR relay->destination");
  f.scenario_opt =
      sub->add_option("--scenario", f.scenario, "JSON scenario file");
}

void require_positive_flag(double value, const char* flag) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw UsageError(std::string(flag) + " must be a positive finite number");
  }
}

// Raw SNR flags are checked here (usage errors); scenario contents are
// checked by the library (domain errors).
SnrTriple resolve_channel(const ChannelFlags& f) {
  const bool any_snr = f.l01_opt->count() || f.l02_opt->count() ||
                       f.l12_opt->count();
  if (any_snr && f.scenario_opt->count()) {
    throw UsageError("give either --l01/--l02/--l12 or --scenario, not both");
  }
  if (f.scenario_opt->count()) {
    const Scenario sc = load_scenario(f.scenario);
    if (const auto* g = std::get_if<Geometry>(&sc)) return snr_from_geometry(*g);
    return std::get<SnrTriple>(sc);
  }
  if (!f.l01_opt->count()) throw UsageError("--l01 is required");
  if (!f.l02_opt->count()) throw UsageError("--l02 is required");
  if (!f.l12_opt->count()) throw UsageError("--l12 is required");
  require_positive_flag(f.l01, "--l01");
  require_positive_flag(f.l02, "--l02");
  require_positive_flag(f.l12, "--l12");
  return SnrTriple::make(f.l01, f.l02, f.l12);
}

Geometry resolve_geometry(const std::string& scenario, bool given,
                          const Geometry& fallback) {
  if (!given) return fallback;
  const Scenario sc = load_scenario(scenario);
  if (const auto* g = std::get_if<Geometry>(&sc)) return *g;
  throw UsageError("--scenario must hold a geometry for this command");
}

unsigned resolve_thread_flag(unsigned flag) {
  if (const char* env = std::getenv("RELAYLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return flag;
}

// Fixed-width plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

// ---------------------------------------------------------------- rate

struct RateFlags {
  ChannelFlags channel;
  OutputFlags output;
  std::string scheme = "all";
};

int cmd_rate(const RateFlags& f, std::ostream& out) {
  const SnrTriple s = resolve_channel(f.channel);
  std::vector<std::pair<std::string, RateSolution>> rows;
  if (f.scheme == "cdf" || f.scheme == "all") rows.emplace_back("cdf", solve_cdf(s));
  if (f.scheme == "pdf" || f.scheme == "all") rows.emplace_back("pdf", solve_pdf(s));
  if (f.scheme == "direct" || f.scheme == "all") {
    const ObjectivePair at_origin = pdf_objective(s, 0.0, 0.0);
    const Binding binding = at_origin.term_relay < at_origin.term_dest
                                ? Binding::kRelayDecodeTerm
                                : Binding::kDestinationTerm;
    rows.emplace_back("direct", RateSolution{direct_rate(s), 0.0, 0.0, binding});
  }

  const int p = f.output.precision;
  switch (f.output.parsed()) {
    case Format::kJson: {
      Json j{{"channel", to_json(s)}};
      for (const auto& [name, sol] : rows) j[name] = to_json(sol);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      std::vector<std::vector<std::string>> csv{
          {"scheme", "rate", "alpha", "beta", "binding"}};
      for (const auto& [name, sol] : rows) {
        csv.push_back({name, format_number(sol.rate, p), format_number(sol.alpha, p),
                       format_number(sol.beta, p), std::string(to_string(sol.binding))});
      }
      print_csv(out, csv);
      break;
    }
    case Format::kTable: {
      Table t({"scheme", "rate", "alpha", "beta", "binding"});
      for (const auto& [name, sol] : rows) {
        t.add({name, format_number(sol.rate, p), format_number(sol.alpha, p),
               format_number(sol.beta, p), std::string(to_string(sol.binding))});
      }
      t.print(out);
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- gap

struct GapFlags {
  ChannelFlags channel;
  OutputFlags output;
  bool bounds = false;
};

int cmd_gap(const GapFlags& f, std::ostream& out) {
  const SnrTriple s = resolve_channel(f.channel);
  const GapReport r = gap_report(s);
  const int p = f.output.precision;

  std::vector<std::pair<std::string, std::string>> fields{
      {"r_cdf", format_number(r.r_cdf, p)},
      {"r_pdf", format_number(r.r_pdf, p)},
      {"g", format_number(r.g, p)},
      {"g_bar", format_number(r.g_bar, p)}};
  if (f.bounds) {
    fields.emplace_back("r_pdf_ub", format_optional(r.r_pdf_ub, p));
    fields.emplace_back("g_bar_ub", format_optional(r.g_bar_ub, p));
    fields.emplace_back("lemma5_bound", format_optional(r.lemma5_bound, p));
    fields.emplace_back("g_ub", format_optional(r.g_ub, p));
  }
  fields.emplace_back("regime", std::string(to_string(r.regime)));

  switch (f.output.parsed()) {
    case Format::kJson: {
      Json j = to_json(r);
      if (!f.bounds) {
        for (const char* key : {"r_pdf_ub", "g_bar_ub", "lemma5_bound", "g_ub"}) {
          j.erase(key);
        }
      }
      out << Json{{"channel", to_json(s)}, {"report", j}}.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      std::vector<std::string> header;
      std::vector<std::string> row;
      for (const auto& [k, v] : fields) {
        header.push_back(k);
        row.push_back(v);
      }
      print_csv(out, {header, row});
      break;
    }
    case Format::kTable: {
      Table t({"field", "value"});
      for (const auto& [k, v] : fields) t.add({k, v.empty() ? "-" : v});
      t.print(out);
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
  OutputFlags output;
  SweepSpec spec;
  std::string csv_path;
  std::string svg_path;
  bool no_filter = false;
};

int cmd_sweep(SweepFlags f, unsigned threads, std::ostream& out) {
  f.spec.threads = threads;
  f.spec.unit_disk_filter = !f.no_filter;
  const SweepResult result = position_sweep(f.spec);

  if (!f.csv_path.empty()) {
    std::ofstream csv(f.csv_path);
    if (!csv) throw DomainError("cannot write " + f.csv_path);
    write_sweep_csv(csv, result, f.output.precision);
    if (!csv) throw DomainError("failed writing " + f.csv_path);
  }
  if (!f.svg_path.empty()) {
    std::ofstream svg(f.svg_path);
    if (!svg) throw DomainError("cannot write " + f.svg_path);
    write_sweep_svg(svg, result);
    if (!svg) throw DomainError("failed writing " + f.svg_path);
  }

  const int p = f.output.precision;
  switch (f.output.parsed()) {
    case Format::kJson:
      out << sweep_summary_json(result).dump(2) << '\n';
      break;
    case Format::kCsv:
      print_csv(out, {{"max_g_bar", "x1", "y1", "records"},
                      {format_number(result.max_g_bar, p),
                       format_number(result.argmax.x, p),
                       format_number(result.argmax.y, p),
                       std::to_string(result.records.size())}});
      break;
    case Format::kTable:
      out << "max g_bar = " << format_number(result.max_g_bar, p) << " at ("
          << format_number(result.argmax.x, p) << ", "
          << format_number(result.argmax.y, p) << ") over "
          << result.records.size() << " relay positions\n";
      break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- scans

struct PowerFlags {
  OutputFlags output;
  std::string scenario;
  CLI::Option* scenario_opt = nullptr;
  std::vector<double> p_values{1e-6, 1e-3, 1.0, 1e3, 1e6};
};

int cmd_scan_power(const PowerFlags& f, std::ostream& out) {
  const Geometry geom = resolve_geometry(f.scenario, f.scenario_opt->count() > 0,
                                         asymptotic_power_geometry());
  const auto records = power_scan(geom, f.p_values);
  const int p = f.output.precision;

  std::optional<double> high_limit;
  std::optional<double> low_limit;
  try {
    high_limit = high_snr_limit_g_ub(geom);
    low_limit = low_snr_limit_gbar_ub(geom).value;
  } catch (const DomainError&) {
    // Limits exist only when the relay is closer to the source than the
    // destination is.
  }

  if (f.output.parsed() == Format::kJson) {
    Json rows = Json::array();
    for (const auto& r : records) {
      rows.push_back({{"p", r.p}, {"channel", to_json(r.snr)}, {"report", to_json(r.report)}});
    }
    out << Json{{"geometry", to_json(geom)},
                {"high_snr_limit_g_ub", high_limit ? Json(*high_limit) : Json(nullptr)},
                {"low_snr_limit_gbar_ub", low_limit ? Json(*low_limit) : Json(nullptr)},
                {"records", rows}}
               .dump(2)
        << '\n';
    return kSuccess;
  }

  std::vector<std::vector<std::string>> rows{
      {"P", "lambda01", "lambda02", "lambda12", "r_cdf", "r_pdf", "g", "g_bar",
       "g_ub", "g_bar_ub"}};
  for (const auto& r : records) {
    rows.push_back({format_number(r.p, p), format_number(r.snr.lambda01(), p),
                    format_number(r.snr.lambda02(), p),
                    format_number(r.snr.lambda12(), p),
                    format_number(r.report.r_cdf, p), format_number(r.report.r_pdf, p),
                    format_number(r.report.g, p), format_number(r.report.g_bar, p),
                    format_optional(r.g_ub, p), format_optional(r.g_bar_ub, p)});
  }
  if (f.output.parsed() == Format::kCsv) {
    print_csv(out, rows);
    return kSuccess;
  }
  Table t(rows.front());
  for (std::size_t i = 1; i < rows.size(); ++i) t.add(rows[i]);
  t.print(out);
  out << "high-SNR limit of g_ub: " << format_optional(high_limit, p) << '\n'
      << "low-SNR limit of g_bar_ub: " << format_optional(low_limit, p) << '\n';
  return kSuccess;
}

struct ProximityFlags {
  OutputFlags output;
  std::string kind = "source";
  std::string scenario;
  CLI::Option* scenario_opt = nullptr;
  std::vector<double> d_values{1e-1, 1e-2, 1e-3, 1e-4};
};

int cmd_scan_proximity(const ProximityFlags& f, std::ostream& out) {
  const Geometry base = resolve_geometry(f.scenario, f.scenario_opt->count() > 0,
                                         default_base_geometry());
  const Proximity kind = f.kind == "source" ? Proximity::kRelayNearSource
                                            : Proximity::kRelayNearDestination;
  const auto records = proximity_scan(kind, f.d_values, base);
  const int p = f.output.precision;

  if (f.output.parsed() == Format::kJson) {
    Json rows = Json::array();
    for (const auto& r : records) {
      rows.push_back({{"d", r.d},
                      {"relay", to_json(r.relay)},
                      {"channel", to_json(r.snr)},
                      {"report", to_json(r.report)}});
    }
    out << Json{{"kind", f.kind}, {"base", to_json(base)}, {"records", rows}}.dump(2)
        << '\n';
    return kSuccess;
  }

  std::vector<std::vector<std::string>> rows{
      {"d", "x1", "y1", "g", "g_bar", "g_ub", "g_bar_ub"}};
  for (const auto& r : records) {
    rows.push_back({format_number(r.d, p), format_number(r.relay.x, p),
                    format_number(r.relay.y, p), format_number(r.report.g, p),
                    format_number(r.report.g_bar, p),
                    format_optional(r.report.g_ub, p),
                    format_optional(r.report.g_bar_ub, p)});
  }
  if (f.output.parsed() == Format::kCsv) {
    print_csv(out, rows);
  } else {
    Table t(rows.front());
    for (std::size_t i = 1; i < rows.size(); ++i) t.add(rows[i]);
    t.print(out);
  }
  return kSuccess;
}

struct SearchFlags {
  OutputFlags output;
  std::vector<double> l12_values{1e3, 1e4, 1e5};
};

int cmd_search_bound(const SearchFlags& f, unsigned threads, std::ostream& out) {
  for (double v : f.l12_values) require_positive_flag(v, "--l12");
  const auto records = bound_approach_search(f.l12_values, threads);
  const int p = f.output.precision;

  if (f.output.parsed() == Format::kJson) {
    Json rows = Json::array();
    for (const auto& r : records) rows.push_back(to_json(r));
    out << rows.dump(2) << '\n';
    return kSuccess;
  }
  std::vector<std::vector<std::string>> rows{
      {"lambda12", "lambda01", "lambda02", "g_bar"}};
  for (const auto& r : records) {
    rows.push_back({format_number(r.lambda12, p), format_number(r.lambda01, p),
                    format_number(r.lambda02, p), format_number(r.g_bar, p)});
  }
  if (f.output.parsed() == Format::kCsv) {
    print_csv(out, rows);
  } else {
    Table t(rows.front());
    for (std::size_t i = 1; i < rows.size(); ++i) t.add(rows[i]);
    t.print(out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  std::uint64_t seed = 42;
  std::size_t samples = 0;
  CLI::Option* samples_opt = nullptr;
  std::string suite = "all";
};

inline constexpr std::size_t kDefaultTheoremSamples = 10000;
inline constexpr std::size_t kDefaultOracleSamples = 200;

int cmd_verify(const VerifyFlags& f, unsigned threads, std::ostream& out) {
  const bool given = f.samples_opt->count() > 0;
  if (given && f.samples == 0) throw UsageError("--samples must be at least 1");
  const bool all = f.suite == "all";
  Json summary = Json::object();
  bool pass = true;

  if (all || f.suite == "theorem") {
    const FuzzSummary fuzz =
        theorem_fuzz(f.seed, given ? f.samples : kDefaultTheoremSamples, threads);
    const bool ok = fuzz.violations.empty() && fuzz.worst_g_bar < 0.125;
    summary["theorem"] = to_json(fuzz);
    summary["theorem"]["pass"] = ok;
    pass = pass && ok;
  }
  if (all || f.suite == "h") {
    const HMinimumScan h = h_minimum_scan();
    summary["h"] = {{"points", h.points},
                    {"h_at_2", h.h_at_two},
                    {"grid_min", h.grid_min},
                    {"grid_argmin", h.grid_argmin},
                    {"pass", h.pass}};
    pass = pass && h.pass;
  }
  if (all || f.suite == "oracle") {
    const OracleSuite o = oracle_equivalence(
        f.seed, given ? f.samples : kDefaultOracleSamples, threads);
    Json mismatches = Json::array();
    for (const auto& m : o.mismatches) {
      mismatches.push_back(
          {{"channel", to_json(m.snr)}, {"check", m.what}, {"error", m.error}});
    }
    summary["oracle"] = {{"seed", o.seed},
                         {"samples", o.samples},
                         {"max_rel_err_cdf_closed_form", o.cdf_closed_vs_grid},
                         {"max_rel_err_cdf_solver", o.cdf_solver_vs_grid},
                         {"max_rel_err_pdf_solver", o.pdf_solver_vs_grid},
                         {"max_rel_err_pdf_ub_closed_form", o.pdf_ub_closed_vs_grid},
                         {"max_abs_err_g_ub_identity", o.g_ub_identity},
                         {"mismatches", mismatches},
                         {"pass", o.pass()}};
    pass = pass && o.pass();
  }
  if (all || f.suite == "asymptotics") {
    const AsymptoticsSuite a = asymptotic_checks();
    Json cases = Json::array();
    for (const auto& c : a.cases) {
      cases.push_back({{"case", c.name}, {"detail", c.detail}, {"pass", c.pass}});
    }
    summary["asymptotics"] = {{"cases", cases}, {"pass", a.pass()}};
    pass = pass && a.pass();
  }
  summary["pass"] = pass;
  out << summary.dump(2) << '\n';
  return pass ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decode-forward rate toolkit for the half-duplex AWGN relay channel",
               "relaylab"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads_flag = 0;
  app.add_option("--threads", threads_flag,
                 "Worker threads (0 = all; RELAYLAB_THREADS overrides)");

  RateFlags rate;
  auto* rate_cmd = app.add_subcommand("rate", "Achievable rates for one channel");
  add_channel_flags(rate_cmd, rate.channel);
  add_output_flags(rate_cmd, rate.output);
  rate_cmd->add_option("--scheme", rate.scheme, "cdf, pdf, direct or all")
      ->check(CLI::IsMember({"cdf", "pdf", "direct", "all"}))
      ->capture_default_str();

  GapFlags gap;
  auto* gap_cmd = app.add_subcommand("gap", "PDF-vs-CDF gap report for one channel");
  add_channel_flags(gap_cmd, gap.channel);
  add_output_flags(gap_cmd, gap.output);
  gap_cmd->add_flag("--bounds", gap.bounds, "Include closed-form upper bounds");

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Relay-position sweep of the normalized gap");
  add_output_flags(sweep_cmd, sweep.output);
  sweep_cmd->add_option("--step", sweep.spec.step, "Grid step")->capture_default_str();
  sweep_cmd->add_option("--x-min", sweep.spec.x_min)->capture_default_str();
  sweep_cmd->add_option("--x-max", sweep.spec.x_max)->capture_default_str();
  sweep_cmd->add_option("--y-min", sweep.spec.y_min)->capture_default_str();
  sweep_cmd->add_option("--y-max", sweep.spec.y_max)->capture_default_str();
  sweep_cmd->add_option("--p0", sweep.spec.base.p0)->capture_default_str();
  sweep_cmd->add_option("--p1", sweep.spec.base.p1)->capture_default_str();
  sweep_cmd->add_option("--n1", sweep.spec.base.n1)->capture_default_str();
  sweep_cmd->add_option("--n2", sweep.spec.base.n2)->capture_default_str();
  sweep_cmd->add_flag("--no-filter", sweep.no_filter,
                      "Keep positions outside the unit disk");
  sweep_cmd->add_option("--out", sweep.csv_path, "CSV output path");
  sweep_cmd->add_option("--svg", sweep.svg_path, "SVG heatmap output path");

  PowerFlags power;
  auto* power_cmd = app.add_subcommand("scan-power", "Scale all transmit powers by P");
  add_output_flags(power_cmd, power.output);
  power.scenario_opt = power_cmd->add_option("--scenario", power.scenario,
                                             "JSON geometry (powers act as k0, k1)");
  power_cmd->add_option("--p", power.p_values, "Comma-separated P values")
      ->delimiter(',');

  ProximityFlags proximity;
  auto* prox_cmd = app.add_subcommand("scan-proximity",
                                      "Move the relay toward the source or destination");
  add_output_flags(prox_cmd, proximity.output);
  prox_cmd->add_option("--kind", proximity.kind, "source or destination")
      ->check(CLI::IsMember({"source", "destination"}))
      ->capture_default_str();
  proximity.scenario_opt =
      prox_cmd->add_option("--scenario", proximity.scenario, "JSON base geometry");
  prox_cmd->add_option("--d", proximity.d_values,
                       "Comma-separated, strictly decreasing distances")
      ->delimiter(',');

  SearchFlags search;
  auto* search_cmd = app.add_subcommand(
      "search-bound", "Maximize the normalized gap over lambda01, lambda02");
  add_output_flags(search_cmd, search.output);
  search_cmd->add_option("--l12", search.l12_values, "Comma-separated lambda12 values")
      ->delimiter(',');

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify.samples_opt = verify_cmd->add_option("--samples", verify.samples,
                                              "Samples (theorem: 10000, oracle: 200)");
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"theorem", "oracle", "asymptotics", "h", "all"}))
      ->capture_default_str();

  std::vector<std::string> argv_store{"relaylab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageFailure;
  }

  const unsigned threads = resolve_thread_flag(threads_flag);
  try {
    if (*rate_cmd) return cmd_rate(rate, out);
    if (*gap_cmd) return cmd_gap(gap, out);
    if (*sweep_cmd) return cmd_sweep(sweep, threads, out);
    if (*power_cmd) return cmd_scan_power(power, out);
    if (*prox_cmd) return cmd_scan_proximity(proximity, out);
    if (*search_cmd) return cmd_search_bound(search, threads, out);
    if (*verify_cmd) return cmd_verify(verify, threads, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsageFailure;
}

}  // namespace relaylab::cli
