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

// Numerical studies: relay-position sweeps, power and proximity scans,
// randomized verification of the 9/8 bound and a search for channels whose
// normalized gap approaches 1/8.
//
// Work items are independent and may run on several threads; results are
// always merged in grid or sample order, so output does not depend on the
// thread count.

#ifndef RELAYLAB_EXPERIMENTS_H_
#define RELAYLAB_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relaylab/channel.h"
#include "relaylab/gap.h"

namespace relaylab {

// 0 selects std::thread::hardware_concurrency().
unsigned resolve_threads(unsigned requested);

// Source (0,0), destination (0,1), P0 = P1 = 100, N1 = N2 = 1. The relay
// field is a placeholder; sweeps and scans overwrite it.
Geometry default_base_geometry();

struct SweepSpec {
  Geometry base = default_base_geometry();
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = -0.2;
  double y_max = 1.2;
  double step = 0.01;
  // Keep only relay positions with sqrt(x^2 + y^2) < 1.
  bool unit_disk_filter = true;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

// Throws DomainError on a non-positive step, an empty range or an invalid
// base geometry.
void validate(const SweepSpec& spec);

inline constexpr double kNodeExclusionRadius = 1e-9;

struct SweepRecord {
  Point relay;
  SnrTriple snr;
  GapReport report;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRecord> records;
  std::size_t grid_points = 0;  // before filtering
  double max_g_bar = 0.0;
  Point argmax;
  double runtime_seconds = 0.0;
};

// Evaluates gap_report at every grid point inside the region, skipping points
// within kNodeExclusionRadius of the source or destination. Records are in
// row-major order (x outer, y inner). The first maximum in that order wins.
SweepResult position_sweep(const SweepSpec& spec);

struct PowerScanRecord {
  double p = 0.0;
  SnrTriple snr;
  GapReport report;
  std::optional<double> g_ub;
  std::optional<double> g_bar_ub;
};

// For each P sets P0 = k0 P and P1 = k1 P, where k0 and k1 are the
// geometry's powers, keeping positions and noise.
std::vector<PowerScanRecord> power_scan(const Geometry& geom,
                                        const std::vector<double>& p_values);

enum class Proximity { kRelayNearSource, kRelayNearDestination };

struct ProximityRecord {
  double d = 0.0;
  Point relay;
  SnrTriple snr;
  GapReport report;
};

// Places the relay on the source-destination segment at distance d from the
// chosen endpoint. d_values must be positive, strictly decreasing and shorter
// than the segment.
std::vector<ProximityRecord> proximity_scan(
    Proximity kind, const std::vector<double>& d_values,
    const Geometry& base = default_base_geometry());

struct FuzzViolation {
  std::size_t sample = 0;
  SnrTriple snr;
  std::string what;
};

struct FuzzSummary {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t rejected = 0;
  std::vector<FuzzViolation> violations;
  double worst_g_bar = 0.0;
  std::optional<SnrTriple> worst_channel;
};

inline constexpr double kFuzzLambdaMin = 1e-2;
inline constexpr double kFuzzLambdaMax = 1e6;

// Draws (lambda01, lambda02, lambda12) log-uniform on
// [kFuzzLambdaMin, kFuzzLambdaMax] from SplitMix64(seed), redrawing all three
// until lambda01 > lambda02, and checks on each of n_samples channels:
//   R_CDF <= R_PDF + 1e-12,  R_PDF <= (9/8) R_CDF + 1e-9,
//   gbar <= gbar_ub <= lemma5_bound <= 1/8 (each with 1e-9 slack),
//   G <= G^UB + 1e-12.
FuzzSummary theorem_fuzz(std::uint64_t seed, std::size_t n_samples,
                         unsigned threads = 0);

struct BoundSearchRecord {
  double lambda12 = 0.0;
  double lambda01 = 0.0;
  double lambda02 = 0.0;
  double g_bar = 0.0;
};

// For each lambda12, maximizes the normalized gap over (lambda01, lambda02):
// a 60 x 60 log grid with lambda02 in [1, 1e4] and lambda01 in
// (lambda02, 1e7], then compass search in (log10 lambda01, log10 lambda02)
// starting from the best cell and halving the step down to 1e-7 decades.
std::vector<BoundSearchRecord> bound_approach_search(
    const std::vector<double>& lambda12_values, unsigned threads = 0);

}  // namespace relaylab

#endif  // RELAYLAB_EXPERIMENTS_H_
