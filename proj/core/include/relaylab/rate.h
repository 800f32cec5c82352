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

// Achievable rates of decode-forward schemes on the half-duplex AWGN relay
// channel. All logarithms are base 2; rates are in bits per channel use.
//
// alpha is the fraction of each block during which the relay listens; beta is
// the fraction of source power sent coherently with the relay. Partial
// decode-forward (PDF) optimizes both; complete decode-forward (CDF) fixes
// beta = 1; direct transmission is alpha = beta = 0.

#ifndef RELAYLAB_RATE_H_
#define RELAYLAB_RATE_H_

#include <string_view>

#include "relaylab/channel.h"

namespace relaylab {

enum class Binding {
  kRelayDecodeTerm,  // the relay-decoding constraint is the smaller term
  kDestinationTerm,  // the destination-decoding constraint is the smaller term
  kBoth,             // both terms agree at the optimum
};

std::string_view to_string(Binding b);

struct RateSolution {
  double rate = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  Binding binding = Binding::kBoth;

  friend bool operator==(const RateSolution&, const RateSolution&) = default;
};

// The two arguments of the max-min rate expression at a fixed (alpha, beta).
struct ObjectivePair {
  double term_relay = 0.0;
  double term_dest = 0.0;

  double min() const { return term_relay < term_dest ? term_relay : term_dest; }
};

// An affine function of alpha on [0, 1] given by its endpoint values.
struct AffineTerm {
  double at_zero = 0.0;
  double at_one = 0.0;

  double operator()(double alpha) const {
    return (1.0 - alpha) * at_zero + alpha * at_one;
  }
};

struct AffineMaxMin {
  double alpha = 0.0;
  double value = 0.0;
  Binding binding = Binding::kBoth;
};

// Exact max over alpha in [0, 1] of min(relay(alpha), dest(alpha)). The
// minimum of two affine functions is concave, so the optimum sits at the
// crossing when it lies inside (0, 1) and at an endpoint otherwise. Ties go
// to the smallest alpha.
AffineMaxMin max_min_affine(const AffineTerm& relay, const AffineTerm& dest);

// (sqrt(lambda02) + sqrt(lambda12))^2: received power when source and relay
// transmit coherently.
double coherent_snr(const SnrTriple& s);

// Throws DomainError if alpha or beta lies outside [0, 1].
ObjectivePair pdf_objective(const SnrTriple& s, double alpha, double beta);
ObjectivePair cdf_objective(const SnrTriple& s, double alpha);

// Terms of the PDF upper bound obtained by letting each term pick its own
// best beta (beta = 0 for the relay term, beta = 1 for the destination term).
ObjectivePair pdf_ub_objective(const SnrTriple& s, double alpha);

// (1/2) log2(1 + lambda02).
double direct_rate(const SnrTriple& s);

// Max-min over alpha with beta = 1. Valid in every regime; when
// lambda01 > lambda02 the optimum is the crossing point and binding is kBoth.
RateSolution solve_cdf(const SnrTriple& s);

// Closed form of the CDF rate for lambda01 > lambda02:
//   (1/2) q w / (q + w - u)
// with w = log(1+lambda01), u = log(1+lambda02),
// q = log(1 + coherent_snr). Throws DomainError otherwise.
double cdf_rate_closed_form(const SnrTriple& s);

// Max over alpha of the PDF objective at one fixed beta.
RateSolution solve_pdf_at_beta(const SnrTriple& s, double beta);

inline constexpr int kBetaGridPoints = 1001;
inline constexpr double kBetaTolerance = 1e-10;

// Max over (alpha, beta) in [0, 1]^2 of the PDF objective. The inner
// problem is solved exactly by max_min_affine. The outer profile over beta
// is scanned on a uniform kBetaGridPoints grid and the best cell is refined
// by golden-section search to kBetaTolerance; unimodality in beta is not
// assumed. When several points attain the optimum the smallest beta on the
// grid wins, then the smallest alpha.
RateSolution solve_pdf(const SnrTriple& s);

// Upper bound on the PDF rate in closed form, valid for lambda01 > lambda02:
//   [(1/2) q w - (1/2) u^2] / (q + w - 2u)
// attained at alpha = (q - u) / (q + w - 2u). The bound relaxes beta
// separately in each term, so the returned beta carries no meaning and is
// reported as 0. Throws DomainError when lambda01 <= lambda02.
RateSolution solve_pdf_ub(const SnrTriple& s);

}  // namespace relaylab

#endif  // RELAYLAB_RATE_H_
