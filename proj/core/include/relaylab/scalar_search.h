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

#ifndef RELAYLAB_SCALAR_SEARCH_H_
#define RELAYLAB_SCALAR_SEARCH_H_

#include <cmath>
#include <utility>

namespace relaylab {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for a maximum of f on [lo, hi]. Stops once the
// bracket is narrower than tol. Only a local maximum is guaranteed when f is
// not unimodal on the bracket, so callers bracket with a grid first. The
// result is the best point evaluated, endpoints included.
template <typename F>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double tol,
                                      int max_iterations = 200) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (hi < lo) std::swap(lo, hi);

  ScalarOptimum best{lo, f(lo)};
  auto consider = [&best](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(hi, f(hi));

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  consider(c, fc);
  consider(d, fd);
  return best;
}

}  // namespace relaylab

#endif  // RELAYLAB_SCALAR_SEARCH_H_
