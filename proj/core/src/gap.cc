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

#include "relaylab/gap.h"

#include <cmath>
#include <string>

#include "relaylab/errors.h"
#include "relaylab/rate.h"

namespace relaylab {
namespace {

void require_relay_advantaged(const SnrTriple& s, const char* what) {
  if (!(s.lambda01() > s.lambda02())) {
    throw DomainError(std::string(what) + " requires lambda01 > lambda02");
  }
}

}  // namespace

LogVariables log_variables(const SnrTriple& s, LogBase base) {
  auto lg = [base](double x) {
    return base == LogBase::kBits ? std::log2(x) : std::log(x);
  };
  LogVariables lv;
  lv.w = lg(1.0 + s.lambda01());
  lv.u = lg(1.0 + s.lambda02());
  lv.v = lv.w - 2.0 * lv.u;
  lv.t = lv.u * (lv.w - lv.u) / lv.w;
  lv.q = lg(1.0 + coherent_snr(s));
  return lv;
}

double gbar_ub(const LogVariables& lv) {
  return lv.t * (lv.q - lv.u) / (lv.q * (lv.q + lv.v));
}

double gbar_ub(const SnrTriple& s) {
  require_relay_advantaged(s, "gbar_ub");
  return gbar_ub(log_variables(s));
}

double lemma5_bound(const LogVariables& lv) {
  const double uw = lv.u * (lv.w - lv.u);
  return uw / (lv.w * (lv.w + 2.0 * std::sqrt(uw)));
}

double lemma5_bound(const SnrTriple& s) {
  require_relay_advantaged(s, "lemma5_bound");
  return lemma5_bound(log_variables(s));
}

double h_of_s(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw DomainError("h(s) requires finite s > 1, got " + std::to_string(s));
  }
  const double r = s - 1.0;
  return s * (1.0 + 2.0 / std::sqrt(r) + 1.0 / r);
}

double g_ub(const SnrTriple& s) {
  require_relay_advantaged(s, "g_ub");
  const LogVariables lv = log_variables(s);
  const double w = lv.w;
  const double u = lv.u;
  const double q = lv.q;
  return (w - u) * (q - u) * u /
         (2.0 * (q + w - 2.0 * u) * (q + w - u));
}

HighSnrConstants high_snr_constants(const Geometry& geom) {
  const SnrTriple s = snr_from_geometry(geom);
  return {s.lambda01() / s.lambda02(), coherent_snr(s) / s.lambda02()};
}

double high_snr_limit_g_ub(const Geometry& geom) {
  const HighSnrConstants c = high_snr_constants(geom);
  if (!(c.c1 > 1.0)) {
    throw DomainError("high-SNR limit requires C1 = lambda01/lambda02 > 1");
  }
  return 0.5 / (1.0 / std::log2(c.c1) + 1.0 / std::log2(c.c2));
}

LowSnrLimit low_snr_limit_gbar_ub(const Geometry& geom) {
  const SnrTriple s = snr_from_geometry(geom);
  if (!(distance(geom.source, geom.relay) <
        distance(geom.source, geom.destination))) {
    throw DomainError("low-SNR limit requires d01 < d02");
  }
  require_relay_advantaged(s, "low-SNR limit");

  const double l01 = s.lambda01();
  const double l02 = s.lambda02();
  const double l12 = s.lambda12();
  const double coherent = coherent_snr(s);
  LowSnrLimit lim;
  lim.c3 = l02 / l01;
  lim.c4 = (l01 - l02) / ((l01 - l02) + 2.0 * std::sqrt(l02 * l12) + l12);
  lim.c5 = (coherent - l02) / coherent;
  lim.value = lim.c3 * lim.c4 * lim.c5;
  return lim;
}

GapReport gap_report(const SnrTriple& s) {
  GapReport report;
  report.regime = classify_regime(s);
  report.r_cdf = solve_cdf(s).rate;
  report.r_pdf = solve_pdf(s).rate;
  if (report.regime != Regime::kRelayAdvantaged) return report;

  if (report.r_cdf < kMinCdfRate) {
    throw DomainError("R_CDF below " + std::to_string(kMinCdfRate) +
                      " bits; normalized gap is not meaningful");
  }
  report.g = report.r_pdf - report.r_cdf;
  report.g_bar = report.g / report.r_cdf;

  const LogVariables lv = log_variables(s);
  report.r_pdf_ub = solve_pdf_ub(s).rate;
  report.g_bar_ub = gbar_ub(lv);
  report.lemma5_bound = lemma5_bound(lv);
  report.g_ub = g_ub(s);
  return report;
}

}  // namespace relaylab
