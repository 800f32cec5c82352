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

// Channel parameterizations of the half-duplex AWGN single-relay channel.
//
// Node 0 is the source, node 1 the relay and node 2 the destination. A
// channel is fully described for rate purposes by the three link SNRs
// lambda_ij = h_ij^2 P_i / N_j. Under the free-space model h_ij = 1 / d_ij,
// so lambda_ij = P_i / (d_ij^2 N_j).

#ifndef RELAYLAB_CHANNEL_H_
#define RELAYLAB_CHANNEL_H_

#include <string_view>

namespace relaylab {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

// Link SNRs. Construction goes through make(), which enforces that every
// component is strictly positive and finite; rate code never sees anything
// else.
class SnrTriple {
 public:
  // Throws DomainError naming the offending component.
  static SnrTriple make(double lambda01, double lambda02, double lambda12);

  double lambda01() const { return lambda01_; }
  double lambda02() const { return lambda02_; }
  double lambda12() const { return lambda12_; }

  friend bool operator==(const SnrTriple&, const SnrTriple&) = default;

 private:
  SnrTriple(double l01, double l02, double l12)
      : lambda01_(l01), lambda02_(l02), lambda12_(l12) {}

  double lambda01_;
  double lambda02_;
  double lambda12_;
};

struct Geometry {
  Point source{0.0, 0.0};
  Point relay{0.0, 0.5};
  Point destination{0.0, 1.0};
  double p0 = 100.0;
  double p1 = 100.0;
  double n1 = 1.0;
  double n2 = 1.0;

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

// Throws DomainError if a coordinate, power or noise is non-finite, a power
// or noise is not strictly positive, or two nodes that form a link coincide.
void validate(const Geometry& g);

// Path-loss exponent is fixed at 2.
SnrTriple snr_from_geometry(const Geometry& g);

enum class Regime {
  kRelayAdvantaged,   // lambda01 > lambda02
  kEqual,             // lambda01 == lambda02 within tolerance
  kDirectAdvantaged,  // lambda01 < lambda02
};

inline constexpr double kDefaultRegimeTolerance = 1e-12;

// Equal when |lambda01 - lambda02| <= tol * max(lambda01, lambda02).
Regime classify_regime(const SnrTriple& s,
                       double tol = kDefaultRegimeTolerance);

std::string_view to_string(Regime r);

}  // namespace relaylab

#endif  // RELAYLAB_CHANNEL_H_
