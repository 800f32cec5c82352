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

#include "relaylab/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaylab/errors.h"

namespace relaylab {
namespace {

void require_positive_finite(double value, const char* field) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw DomainError(std::string(field) +
                      " must be strictly positive and finite, got " +
                      std::to_string(value));
  }
}

void require_finite(const Point& p, const char* field) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw DomainError(std::string(field) + " has a non-finite coordinate");
  }
}

void require_separated(const Point& a, const Point& b, const char* field) {
  if (!(distance(a, b) > 0.0)) {
    throw DomainError(std::string(field) +
                      " must be strictly positive (coincident nodes)");
  }
}

}  // namespace

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

SnrTriple SnrTriple::make(double lambda01, double lambda02, double lambda12) {
  require_positive_finite(lambda01, "lambda01");
  require_positive_finite(lambda02, "lambda02");
  require_positive_finite(lambda12, "lambda12");
  return SnrTriple(lambda01, lambda02, lambda12);
}

void validate(const Geometry& g) {
  require_finite(g.source, "source");
  require_finite(g.relay, "relay");
  require_finite(g.destination, "destination");
  require_positive_finite(g.p0, "p0");
  require_positive_finite(g.p1, "p1");
  require_positive_finite(g.n1, "n1");
  require_positive_finite(g.n2, "n2");
  require_separated(g.source, g.relay, "d01");
  require_separated(g.source, g.destination, "d02");
  require_separated(g.relay, g.destination, "d12");
}

SnrTriple snr_from_geometry(const Geometry& g) {
  validate(g);
  const double d01 = distance(g.source, g.relay);
  const double d02 = distance(g.source, g.destination);
  const double d12 = distance(g.relay, g.destination);
  // A tiny but nonzero distance can still overflow the SNR.
  return SnrTriple::make(g.p0 / (d01 * d01 * g.n1), g.p0 / (d02 * d02 * g.n2),
                         g.p1 / (d12 * d12 * g.n2));
}

Regime classify_regime(const SnrTriple& s, double tol) {
  const double a = s.lambda01();
  const double b = s.lambda02();
  if (std::abs(a - b) <= tol * std::max(a, b)) return Regime::kEqual;
  return a > b ? Regime::kRelayAdvantaged : Regime::kDirectAdvantaged;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kRelayAdvantaged:
      return "RelayAdvantaged";
    case Regime::kEqual:
      return "Equal";
    case Regime::kDirectAdvantaged:
      return "DirectAdvantaged";
  }
  return "Unknown";
}

}  // namespace relaylab
