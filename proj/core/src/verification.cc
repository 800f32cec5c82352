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

#include "relaylab/verification.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "relaylab/experiments.h"
#include "relaylab/gap.h"
#include "relaylab/oracles.h"
#include "relaylab/random.h"
#include "relaylab/rate.h"

namespace relaylab {
namespace {

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

}  // namespace

HMinimumScan h_minimum_scan(std::size_t points) {
  HMinimumScan scan;
  scan.points = points;
  scan.h_at_two = h_of_s(2.0);
  scan.grid_spacing = 99.0 / static_cast<double>(points);
  scan.grid_min = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= points; ++k) {
    const double s = 1.0 + 99.0 * static_cast<double>(k) / points;
    const double h = h_of_s(s);
    if (h < scan.grid_min) {
      scan.grid_min = h;
      scan.grid_argmin = s;
    }
  }
  scan.pass = std::abs(scan.h_at_two - 8.0) <= 1e-12 &&
              scan.grid_min >= 8.0 - 1e-9 &&
              std::abs(scan.grid_argmin - 2.0) <= scan.grid_spacing;
  return scan;
}

OracleSuite oracle_equivalence(std::uint64_t seed, std::size_t samples,
                               unsigned threads) {
  OracleSuite suite;
  suite.seed = seed;
  suite.samples = samples;

  SplitMix64 rng(seed);
  std::vector<SnrTriple> channels;
  while (channels.size() < samples) {
    const double l01 = rng.log_uniform(kFuzzLambdaMin, kFuzzLambdaMax);
    const double l02 = rng.log_uniform(kFuzzLambdaMin, kFuzzLambdaMax);
    const double l12 = rng.log_uniform(kFuzzLambdaMin, kFuzzLambdaMax);
    const SnrTriple s = SnrTriple::make(l01, l02, l12);
    if (classify_regime(s) == Regime::kRelayAdvantaged) channels.push_back(s);
  }

  struct Errors {
    double cdf_closed, cdf_solver, pdf, pdf_ub, g_ub;
  };
  std::vector<Errors> errors(samples);
  const unsigned workers = std::min<unsigned>(
      resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(samples, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < samples; i += workers) {
        const SnrTriple& s = channels[i];
        const oracle::Optimum cdf = oracle::cdf_rate(s);
        const oracle::Optimum pdf = oracle::pdf_rate(s);
        const oracle::Optimum ub = oracle::pdf_ub_rate(s);
        const double r_cdf = solve_cdf(s).rate;
        const double r_ub = solve_pdf_ub(s).rate;
        errors[i] = {relative_error(cdf_rate_closed_form(s), cdf.rate),
                     relative_error(r_cdf, cdf.rate),
                     relative_error(solve_pdf(s).rate, pdf.rate),
                     relative_error(r_ub, ub.rate),
                     std::abs(g_ub(s) - (r_ub - r_cdf))};
      }
    });
  }
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < samples; ++i) {
    const Errors& e = errors[i];
    const SnrTriple& s = channels[i];
    suite.cdf_closed_vs_grid = std::max(suite.cdf_closed_vs_grid, e.cdf_closed);
    suite.cdf_solver_vs_grid = std::max(suite.cdf_solver_vs_grid, e.cdf_solver);
    suite.pdf_solver_vs_grid = std::max(suite.pdf_solver_vs_grid, e.pdf);
    suite.pdf_ub_closed_vs_grid = std::max(suite.pdf_ub_closed_vs_grid, e.pdf_ub);
    suite.g_ub_identity = std::max(suite.g_ub_identity, e.g_ub);
    if (e.cdf_closed > kOracleRateTolerance) {
      suite.mismatches.push_back({s, "CDF closed form vs grid", e.cdf_closed});
    }
    if (e.cdf_solver > kOracleRateTolerance) {
      suite.mismatches.push_back({s, "CDF solver vs grid", e.cdf_solver});
    }
    if (e.pdf > kOraclePdfTolerance) {
      suite.mismatches.push_back({s, "PDF solver vs 2-D grid", e.pdf});
    }
    if (e.pdf_ub > kOracleRateTolerance) {
      suite.mismatches.push_back({s, "PDF upper bound vs grid", e.pdf_ub});
    }
    if (e.g_ub > kOracleRateTolerance) {
      suite.mismatches.push_back({s, "G^UB identity", e.g_ub});
    }
  }
  return suite;
}

Geometry asymptotic_power_geometry() {
  return Geometry{{0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0}, 1.0, 1.0, 1.0, 1.0};
}

bool AsymptoticsSuite::pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const AsymptoticCase& c) { return c.pass; });
}

AsymptoticsSuite asymptotic_checks() {
  AsymptoticsSuite out;

  const auto src = proximity_scan(Proximity::kRelayNearSource,
                                  {kAsymptoticDistance});
  out.near_source_gbar_ub = *src.back().report.g_bar_ub;
  out.near_source_g_ub = *src.back().report.g_ub;
  out.cases.push_back(
      {"relay near source (d01 = 1e-4)",
       fmt("gbar_ub = %.6g, g_ub = %.6g bits", out.near_source_gbar_ub,
           out.near_source_g_ub),
       out.near_source_gbar_ub < 1e-2 && out.near_source_g_ub < 1e-2});

  const auto dst = proximity_scan(Proximity::kRelayNearDestination,
                                  {kAsymptoticDistance});
  out.near_destination_gbar_ub = *dst.back().report.g_bar_ub;
  out.near_destination_g_ub = *dst.back().report.g_ub;
  out.cases.push_back(
      {"relay near destination (d12 = 1e-4)",
       fmt("gbar_ub = %.6g, g_ub = %.6g bits", out.near_destination_gbar_ub,
           out.near_destination_g_ub),
       out.near_destination_gbar_ub < 1e-2 && out.near_destination_g_ub < 1e-2});

  const Geometry geom = asymptotic_power_geometry();
  const auto scan = power_scan(geom, {kHighSnrPower, kLowSnrPower});

  out.high_snr_g_ub = *scan[0].g_ub;
  out.high_snr_gbar_ub = *scan[0].g_bar_ub;
  out.high_snr_limit = high_snr_limit_g_ub(geom);
  const double high_rel = std::abs(out.high_snr_g_ub / out.high_snr_limit - 1.0);
  out.cases.push_back(
      {"high SNR (P = 1e6)",
       fmt("g_ub = %.6g bits vs limit %.6g bits", out.high_snr_g_ub,
           out.high_snr_limit) +
           fmt(" (rel. dev. %.4g), gbar_ub = %.6g", high_rel,
               out.high_snr_gbar_ub),
       high_rel <= 0.05 && out.high_snr_gbar_ub < 1e-2});

  out.low_snr_gbar_ub = *scan[1].g_bar_ub;
  out.low_snr_g_ub = *scan[1].g_ub;
  out.low_snr_limit = low_snr_limit_gbar_ub(geom).value;
  const double low_rel = std::abs(out.low_snr_gbar_ub / out.low_snr_limit - 1.0);
  out.cases.push_back(
      {"low SNR (P = 1e-6)",
       fmt("gbar_ub = %.6g vs C3*C4*C5 = %.6g", out.low_snr_gbar_ub,
           out.low_snr_limit) +
           fmt(" (rel. dev. %.4g), g_ub = %.6g bits", low_rel, out.low_snr_g_ub),
       low_rel <= 0.05 && out.low_snr_g_ub < 1e-3});
  return out;
}

}  // namespace relaylab
