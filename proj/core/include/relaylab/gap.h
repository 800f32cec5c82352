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

// Gap between partial and complete decode-forward, its closed-form upper
// bounds, and their limits under the free-space path-loss model.
//
// With w = log(1+lambda01), u = log(1+lambda02), v = w - 2u,
// t = u(w-u)/w and q = log(1 + (sqrt(lambda02) + sqrt(lambda12))^2) the
// normalized gap obeys
//
//   gbar <= t(q-u) / (q(q+v))                  (gbar_ub)
//        <= u(w-u) / (w [w + 2 sqrt(u(w-u))])  (lemma5_bound = 1 / h(w/u))
//        <= 1/8                                (h attains its minimum 8 at 2)
//
// whenever lambda01 > lambda02. Every closed form here throws DomainError
// outside that regime.

#ifndef RELAYLAB_GAP_H_
#define RELAYLAB_GAP_H_

#include <optional>

#include "relaylab/channel.h"

namespace relaylab {

enum class LogBase { kBits, kNats };

struct LogVariables {
  double w = 0.0;
  double u = 0.0;
  double v = 0.0;
  double t = 0.0;
  double q = 0.0;
};

LogVariables log_variables(const SnrTriple& s, LogBase base = LogBase::kBits);

double gbar_ub(const SnrTriple& s);
double gbar_ub(const LogVariables& lv);

double lemma5_bound(const SnrTriple& s);
double lemma5_bound(const LogVariables& lv);

// h(s) = s [1 + 2 (s-1)^(-1/2) + (s-1)^(-1)], defined for s > 1.
double h_of_s(double s);

// Upper bound on G = R_PDF - R_CDF in bits per channel use; equals
// solve_pdf_ub(s).rate - solve_cdf(s).rate.
double g_ub(const SnrTriple& s);

// C1 = lambda01 / lambda02 and C2 = (sqrt(lambda02) + sqrt(lambda12))^2 /
// lambda02. Both are invariant when every transmit power is scaled by P.
struct HighSnrConstants {
  double c1 = 0.0;
  double c2 = 0.0;
};

HighSnrConstants high_snr_constants(const Geometry& geom);

// (1/2) (1/log2 C1 + 1/log2 C2)^(-1): the constant G^UB tends to as all
// powers grow. The O(1/log P) correction is dropped. Throws DomainError if
// C1 <= 1.
double high_snr_limit_g_ub(const Geometry& geom);

// Limit of gbar_ub as every transmit power tends to zero. With unit noise:
//   C3 = (d01/d02)^2
//   C4 = (d01^-2 - d02^-2) k0 /
//        [(d01^-2 - d02^-2) k0 + 2 d02^-1 d12^-1 sqrt(k0 k1) + d12^-2 k1]
//   C5 = [(sqrt(k0)/d02 + sqrt(k1)/d12)^2 - k0/d02^2] /
//        (sqrt(k0)/d02 + sqrt(k1)/d12)^2
// where k0, k1 are the geometry's powers. The factors are evaluated from
// SNR ratios, which also accounts for non-unit noise.
struct LowSnrLimit {
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
  double value = 0.0;  // c3 * c4 * c5
};

// Throws DomainError unless d01 < d02 and lambda01 > lambda02.
LowSnrLimit low_snr_limit_gbar_ub(const Geometry& geom);

// R_CDF below this many bits is rejected when normalizing the gap.
inline constexpr double kMinCdfRate = 1e-15;

struct GapReport {
  double r_cdf = 0.0;
  double r_pdf = 0.0;
  double g = 0.0;
  double g_bar = 0.0;
  // Present only in the RelayAdvantaged regime.
  std::optional<double> r_pdf_ub;
  std::optional<double> g_bar_ub;
  std::optional<double> lemma5_bound;
  std::optional<double> g_ub;
  Regime regime = Regime::kRelayAdvantaged;

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

// Outside the RelayAdvantaged regime the best PDF scheme is direct
// transmission and g, g_bar are reported as 0 by convention; r_cdf and r_pdf
// still hold the solver values. Throws DomainError if R_CDF < kMinCdfRate in
// the RelayAdvantaged regime.
GapReport gap_report(const SnrTriple& s);

}  // namespace relaylab

#endif  // RELAYLAB_GAP_H_
