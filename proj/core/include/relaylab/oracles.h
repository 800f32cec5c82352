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

// Brute-force reference solvers for the rate optimizations.
//
// These share no code with rate.cc: the objective terms are transcribed
// again here using natural logarithms, and optima are located by dense grids
// followed by bisection (1-D) or ternary search plus window zooming (2-D)
// rather than by the closed-form crossing.

#ifndef RELAYLAB_ORACLES_H_
#define RELAYLAB_ORACLES_H_

#include "relaylab/channel.h"

namespace relaylab::oracle {

struct Optimum {
  double rate = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

// max over alpha of min(alpha/2 log(1+l01), alpha/2 log(1+l02) +
// (1-alpha)/2 log(1 + (sqrt l02 + sqrt l12)^2)) on a grid of the given step,
// with bisection of the crossing next to the best grid point.
Optimum cdf_rate(const SnrTriple& s, double step = 1e-6);

// Same procedure for the relaxed bound whose first term uses beta = 0 and
// whose second uses beta = 1.
Optimum pdf_ub_rate(const SnrTriple& s, double step = 1e-6);

// Full (alpha, beta) grid of the given step, then zooming in beta around the
// best cell with the inner maximum over alpha found by ternary search.
Optimum pdf_rate(const SnrTriple& s, double step = 1e-3);

}  // namespace relaylab::oracle

#endif  // RELAYLAB_ORACLES_H_
