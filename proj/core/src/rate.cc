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

#include "relaylab/rate.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaylab/errors.h"
#include "relaylab/scalar_search.h"

namespace relaylab {
namespace {

constexpr double kBindingTolerance = 1e-12;

void require_fraction(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " +
                      std::to_string(value));
  }
}

void require_relay_advantaged(const SnrTriple& s, const char* what) {
  if (!(s.lambda01() > s.lambda02())) {
    throw DomainError(std::string(what) +
                      " requires lambda01 > lambda02");
  }
}

Binding classify_binding(double relay, double dest) {
  const double scale = std::max({std::abs(relay), std::abs(dest), 1.0});
  if (std::abs(relay - dest) <= kBindingTolerance * scale) return Binding::kBoth;
  return relay < dest ? Binding::kRelayDecodeTerm : Binding::kDestinationTerm;
}

struct TermPair {
  AffineTerm relay;
  AffineTerm dest;
};

// At alpha = 1 the relay listens the whole block and both terms reduce to
// single-hop rates; at alpha = 0 only the relay-transmit phase remains.
TermPair pdf_terms(const SnrTriple& s, double beta) {
  const double l02 = s.lambda02();
  const double l12 = s.lambda12();
  return {
      {0.5 * std::log2(1.0 + (1.0 - beta) * l02),
       0.5 * std::log2(1.0 + s.lambda01())},
      {0.5 * std::log2(1.0 + l02 + l12 + 2.0 * std::sqrt(beta * l02 * l12)),
       0.5 * std::log2(1.0 + l02)},
  };
}

TermPair cdf_terms(const SnrTriple& s) {
  return {
      {0.0, 0.5 * std::log2(1.0 + s.lambda01())},
      {0.5 * std::log2(1.0 + coherent_snr(s)), 0.5 * std::log2(1.0 + s.lambda02())},
  };
}

TermPair pdf_ub_terms(const SnrTriple& s) {
  const double u = 0.5 * std::log2(1.0 + s.lambda02());
  return {
      {u, 0.5 * std::log2(1.0 + s.lambda01())},
      {0.5 * std::log2(1.0 + coherent_snr(s)), u},
  };
}

ObjectivePair evaluate(const TermPair& terms, double alpha) {
  return {terms.relay(alpha), terms.dest(alpha)};
}

}  // namespace

std::string_view to_string(Binding b) {
  switch (b) {
    case Binding::kRelayDecodeTerm:
      return "RelayDecodeTerm";
    case Binding::kDestinationTerm:
      return "DestinationTerm";
    case Binding::kBoth:
      return "Both";
  }
  return "Unknown";
}

AffineMaxMin max_min_affine(const AffineTerm& relay, const AffineTerm& dest) {
  auto at = [&](double alpha) {
    const double r = relay(alpha);
    const double d = dest(alpha);
    return AffineMaxMin{alpha, std::min(r, d), classify_binding(r, d)};
  };

  AffineMaxMin best = at(0.0);
  const double diff0 = relay.at_zero - dest.at_zero;
  const double diff1 = relay.at_one - dest.at_one;
  if ((diff0 < 0.0 && diff1 > 0.0) || (diff0 > 0.0 && diff1 < 0.0)) {
    const double alpha = diff0 / (diff0 - diff1);
    if (alpha > 0.0 && alpha < 1.0) {
      AffineMaxMin crossing = at(alpha);
      crossing.binding = Binding::kBoth;
      if (crossing.value > best.value) best = crossing;
    }
  }
  const AffineMaxMin one = at(1.0);
  if (one.value > best.value) best = one;
  return best;
}

double coherent_snr(const SnrTriple& s) {
  const double amplitude = std::sqrt(s.lambda02()) + std::sqrt(s.lambda12());
  return amplitude * amplitude;
}

ObjectivePair pdf_objective(const SnrTriple& s, double alpha, double beta) {
  require_fraction(alpha, "alpha");
  require_fraction(beta, "beta");
  return evaluate(pdf_terms(s, beta), alpha);
}

ObjectivePair cdf_objective(const SnrTriple& s, double alpha) {
  require_fraction(alpha, "alpha");
  return evaluate(cdf_terms(s), alpha);
}

ObjectivePair pdf_ub_objective(const SnrTriple& s, double alpha) {
  require_fraction(alpha, "alpha");
  return evaluate(pdf_ub_terms(s), alpha);
}

double direct_rate(const SnrTriple& s) {
  return 0.5 * std::log2(1.0 + s.lambda02());
}

RateSolution solve_cdf(const SnrTriple& s) {
  const TermPair terms = cdf_terms(s);
  const AffineMaxMin opt = max_min_affine(terms.relay, terms.dest);
  return {opt.value, opt.alpha, 1.0, opt.binding};
}

double cdf_rate_closed_form(const SnrTriple& s) {
  require_relay_advantaged(s, "CDF closed form");
  const double w = std::log2(1.0 + s.lambda01());
  const double u = std::log2(1.0 + s.lambda02());
  const double q = std::log2(1.0 + coherent_snr(s));
  return 0.5 * q * w / (q + w - u);
}

RateSolution solve_pdf_at_beta(const SnrTriple& s, double beta) {
  require_fraction(beta, "beta");
  const TermPair terms = pdf_terms(s, beta);
  const AffineMaxMin opt = max_min_affine(terms.relay, terms.dest);
  return {opt.value, opt.alpha, beta, opt.binding};
}

RateSolution solve_pdf(const SnrTriple& s) {
  constexpr int kLast = kBetaGridPoints - 1;
  RateSolution best = solve_pdf_at_beta(s, 0.0);
  int best_index = 0;
  for (int i = 1; i <= kLast; ++i) {
    const RateSolution candidate =
        solve_pdf_at_beta(s, static_cast<double>(i) / kLast);
    if (candidate.rate > best.rate) {
      best = candidate;
      best_index = i;
    }
  }

  const double lo = static_cast<double>(std::max(best_index - 1, 0)) / kLast;
  const double hi = static_cast<double>(std::min(best_index + 1, kLast)) / kLast;
  const ScalarOptimum refined = golden_section_maximize(
      [&s](double beta) { return solve_pdf_at_beta(s, beta).rate; }, lo, hi,
      kBetaTolerance);
  if (refined.value > best.rate) best = solve_pdf_at_beta(s, refined.x);
  return best;
}

RateSolution solve_pdf_ub(const SnrTriple& s) {
  require_relay_advantaged(s, "PDF upper bound");
  const double w = std::log2(1.0 + s.lambda01());
  const double u = std::log2(1.0 + s.lambda02());
  const double q = std::log2(1.0 + coherent_snr(s));
  const double denom = q + w - 2.0 * u;
  return {(0.5 * q * w - 0.5 * u * u) / denom, (q - u) / denom, 0.0,
          Binding::kBoth};
}

}  // namespace relaylab
