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

#include "relaylab/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>

namespace relaylab::oracle {
namespace {

const double kLn2 = std::log(2.0);

double bits(double x) { return std::log(x) / kLn2; }

using Curve = std::function<double(double)>;

Optimum grid_then_bisect(const Curve& a, const Curve& b, double step) {
  const long n = std::lround(1.0 / step);
  auto value = [&](double alpha) { return std::min(a(alpha), b(alpha)); };

  long best_k = 0;
  double best = value(0.0);
  for (long k = 1; k <= n; ++k) {
    const double v = value(static_cast<double>(k) / n);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  Optimum out{best, static_cast<double>(best_k) / n, 0.0};

  auto bisect = [&](double lo, double hi) {
    const bool lo_sign = a(lo) > b(lo);
    if (lo_sign == (a(hi) > b(hi))) return;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      ((a(mid) > b(mid)) == lo_sign ? lo : hi) = mid;
    }
    for (double alpha : {lo, hi}) {
      const double v = value(alpha);
      if (v > out.rate) out = {v, alpha, 0.0};
    }
  };
  if (best_k > 0) {
    bisect(static_cast<double>(best_k - 1) / n, static_cast<double>(best_k) / n);
  }
  if (best_k < n) {
    bisect(static_cast<double>(best_k) / n, static_cast<double>(best_k + 1) / n);
  }
  return out;
}

}  // namespace

Optimum cdf_rate(const SnrTriple& s, double step) {
  const double w = bits(1.0 + s.lambda01());
  const double u = bits(1.0 + s.lambda02());
  const double root = std::sqrt(s.lambda02()) + std::sqrt(s.lambda12());
  const double q = bits(1.0 + root * root);
  Optimum o = grid_then_bisect([&](double al) { return al / 2.0 * w; },
                               [&](double al) {
                                 return al / 2.0 * u + (1.0 - al) / 2.0 * q;
                               },
                               step);
  o.beta = 1.0;
  return o;
}

Optimum pdf_ub_rate(const SnrTriple& s, double step) {
  const double w = bits(1.0 + s.lambda01());
  const double u = bits(1.0 + s.lambda02());
  const double root = std::sqrt(s.lambda02()) + std::sqrt(s.lambda12());
  const double q = bits(1.0 + root * root);
  return grid_then_bisect(
      [&](double al) { return al / 2.0 * w + (1.0 - al) / 2.0 * u; },
      [&](double al) { return al / 2.0 * u + (1.0 - al) / 2.0 * q; }, step);
}

Optimum pdf_rate(const SnrTriple& s, double step) {
  const double l01 = s.lambda01();
  const double l02 = s.lambda02();
  const double l12 = s.lambda12();
  const double w = bits(1.0 + l01);
  const double u = bits(1.0 + l02);

  struct BetaTerms {
    double relay_tx;  // log(1 + (1-beta) l02)
    double dest_tx;   // log(1 + l02 + l12 + 2 sqrt(beta l02 l12))
  };
  auto terms = [&](double beta) {
    return BetaTerms{bits(1.0 + (1.0 - beta) * l02),
                     bits(1.0 + l02 + l12 + 2.0 * std::sqrt(beta * l02 * l12))};
  };
  auto objective = [&](const BetaTerms& t, double al) {
    const double first = al / 2.0 * w + (1.0 - al) / 2.0 * t.relay_tx;
    const double second = al / 2.0 * u + (1.0 - al) / 2.0 * t.dest_tx;
    return std::min(first, second);
  };

  const long n = std::lround(1.0 / step);
  Optimum best{-1.0, 0.0, 0.0};
  for (long j = 0; j <= n; ++j) {
    const double beta = static_cast<double>(j) / n;
    const BetaTerms t = terms(beta);
    for (long i = 0; i <= n; ++i) {
      const double al = static_cast<double>(i) / n;
      const double v = objective(t, al);
      if (v > best.rate) best = {v, al, beta};
    }
  }

  // The objective is a minimum of two affine functions of alpha, hence
  // concave in alpha.
  auto profile = [&](double beta) {
    const BetaTerms t = terms(beta);
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 300 && hi - lo > 1e-15; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (objective(t, m1) < objective(t, m2)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    Optimum o{-1.0, 0.0, beta};
    for (double al : {0.0, lo, 0.5 * (lo + hi), hi, 1.0}) {
      const double v = objective(t, al);
      if (v > o.rate) o = {v, al, beta};
    }
    return o;
  };

  const Optimum at_grid = profile(best.beta);
  if (at_grid.rate > best.rate) best = at_grid;

  constexpr int kWindowPoints = 41;
  double half_width = 2.0 * step;
  for (int it = 0; it < 400 && half_width > 1e-14; ++it) {
    const double lo = std::max(0.0, best.beta - half_width);
    const double hi = std::min(1.0, best.beta + half_width);
    int best_index = -1;
    for (int k = 0; k < kWindowPoints; ++k) {
      const double beta = lo + (hi - lo) * k / (kWindowPoints - 1);
      const Optimum o = profile(beta);
      if (o.rate > best.rate) {
        best = o;
        best_index = k;
      }
    }
    // Keep the width while the maximum sits on an interior window edge so the
    // window can travel toward it.
    const bool on_edge = (best_index == 0 && lo > 0.0) ||
                         (best_index == kWindowPoints - 1 && hi < 1.0);
    if (!on_edge) half_width *= 0.25;
  }
  return best;
}

}  // namespace relaylab::oracle
