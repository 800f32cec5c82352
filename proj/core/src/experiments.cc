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

#include "relaylab/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <thread>
#include <utility>

#include "relaylab/errors.h"
#include "relaylab/random.h"
#include "relaylab/rate.h"

namespace relaylab {
namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers, each taking a
// contiguous block. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::size_t grid_count(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

Geometry default_base_geometry() {
  return Geometry{{0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0}, 100.0, 100.0, 1.0, 1.0};
}

void validate(const SweepSpec& spec) {
  validate(spec.base);
  require_positive(spec.step, "step");
  if (!std::isfinite(spec.x_min) || !std::isfinite(spec.x_max) ||
      !(spec.x_min <= spec.x_max)) {
    throw DomainError("x range is empty or non-finite");
  }
  if (!std::isfinite(spec.y_min) || !std::isfinite(spec.y_max) ||
      !(spec.y_min <= spec.y_max)) {
    throw DomainError("y range is empty or non-finite");
  }
}

SweepResult position_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();

  const std::size_t nx = grid_count(spec.x_min, spec.x_max, spec.step);
  const std::size_t ny = grid_count(spec.y_min, spec.y_max, spec.step);

  std::vector<Point> positions;
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = spec.x_min + static_cast<double>(i) * spec.step;
    for (std::size_t j = 0; j < ny; ++j) {
      const double y = spec.y_min + static_cast<double>(j) * spec.step;
      if (spec.unit_disk_filter && !(std::sqrt(x * x + y * y) < 1.0)) continue;
      const Point p{x, y};
      if (distance(p, spec.base.source) <= kNodeExclusionRadius ||
          distance(p, spec.base.destination) <= kNodeExclusionRadius) {
        continue;
      }
      positions.push_back(p);
    }
  }

  std::vector<std::optional<SweepRecord>> slots(positions.size());
  parallel_for(positions.size(), resolve_threads(spec.threads),
               [&](std::size_t k) {
                 Geometry g = spec.base;
                 g.relay = positions[k];
                 const SnrTriple s = snr_from_geometry(g);
                 slots[k] = SweepRecord{positions[k], s, gap_report(s)};
               });

  SweepResult result;
  result.spec = spec;
  result.grid_points = nx * ny;
  result.records.reserve(slots.size());
  bool first = true;
  for (auto& slot : slots) {
    const SweepRecord& r = *slot;
    if (first || r.report.g_bar > result.max_g_bar) {
      result.max_g_bar = r.report.g_bar;
      result.argmax = r.relay;
      first = false;
    }
    result.records.push_back(std::move(*slot));
  }
  result.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::vector<PowerScanRecord> power_scan(const Geometry& geom,
                                        const std::vector<double>& p_values) {
  validate(geom);
  std::vector<PowerScanRecord> out;
  out.reserve(p_values.size());
  for (double p : p_values) {
    require_positive(p, "P");
    Geometry g = geom;
    g.p0 = geom.p0 * p;
    g.p1 = geom.p1 * p;
    const SnrTriple s = snr_from_geometry(g);
    GapReport report = gap_report(s);
    const auto g_ub_value = report.g_ub;
    const auto g_bar_ub_value = report.g_bar_ub;
    out.push_back({p, s, std::move(report), g_ub_value, g_bar_ub_value});
  }
  return out;
}

std::vector<ProximityRecord> proximity_scan(Proximity kind,
                                            const std::vector<double>& d_values,
                                            const Geometry& base) {
  validate(base);
  const double length = distance(base.source, base.destination);
  const Point dir{(base.destination.x - base.source.x) / length,
                  (base.destination.y - base.source.y) / length};

  std::vector<ProximityRecord> out;
  out.reserve(d_values.size());
  double previous = std::numeric_limits<double>::infinity();
  for (double d : d_values) {
    require_positive(d, "d");
    if (!(d < previous)) throw DomainError("d values must strictly decrease");
    if (!(d < length)) {
      throw DomainError("d must be shorter than the source-destination segment");
    }
    previous = d;

    Geometry g = base;
    const Point& anchor =
        kind == Proximity::kRelayNearSource ? base.source : base.destination;
    const double sign = kind == Proximity::kRelayNearSource ? 1.0 : -1.0;
    g.relay = {anchor.x + sign * d * dir.x, anchor.y + sign * d * dir.y};
    const SnrTriple s = snr_from_geometry(g);
    out.push_back({d, g.relay, s, gap_report(s)});
  }
  return out;
}

FuzzSummary theorem_fuzz(std::uint64_t seed, std::size_t n_samples,
                         unsigned threads) {
  if (n_samples == 0) throw DomainError("n_samples must be at least 1");

  FuzzSummary summary;
  summary.seed = seed;
  summary.samples = n_samples;

  SplitMix64 rng(seed);
  std::vector<SnrTriple> channels;
  channels.reserve(n_samples);
  while (channels.size() < n_samples) {
    const double l01 = rng.log_uniform(kFuzzLambdaMin, kFuzzLambdaMax);
    const double l02 = rng.log_uniform(kFuzzLambdaMin, kFuzzLambdaMax);
    const double l12 = rng.log_uniform(kFuzzLambdaMin, kFuzzLambdaMax);
    const SnrTriple s = SnrTriple::make(l01, l02, l12);
    if (classify_regime(s) != Regime::kRelayAdvantaged) {
      ++summary.rejected;
      continue;
    }
    channels.push_back(s);
  }

  struct Outcome {
    double g_bar = 0.0;
    std::vector<std::string> failures;
  };
  std::vector<Outcome> outcomes(n_samples);
  parallel_for(n_samples, resolve_threads(threads), [&](std::size_t i) {
    Outcome& o = outcomes[i];
    try {
      const GapReport r = gap_report(channels[i]);
      o.g_bar = r.g_bar;
      auto check = [&o](bool ok, const char* what) {
        if (!ok) o.failures.emplace_back(what);
      };
      check(r.r_cdf <= r.r_pdf + 1e-12, "R_CDF <= R_PDF");
      check(r.r_pdf <= 9.0 / 8.0 * r.r_cdf + 1e-9, "R_PDF <= 9/8 R_CDF");
      check(r.g_bar <= *r.g_bar_ub + 1e-9, "gbar <= gbar_ub");
      check(*r.g_bar_ub <= *r.lemma5_bound + 1e-9, "gbar_ub <= lemma5_bound");
      check(*r.lemma5_bound <= 0.125 + 1e-9, "lemma5_bound <= 1/8");
      check(r.g <= *r.g_ub + 1e-12, "G <= G^UB");
    } catch (const std::exception& e) {
      o.failures.emplace_back(std::string("exception: ") + e.what());
    }
  });

  for (std::size_t i = 0; i < n_samples; ++i) {
    for (auto& what : outcomes[i].failures) {
      summary.violations.push_back({i, channels[i], std::move(what)});
    }
    if (!summary.worst_channel || outcomes[i].g_bar > summary.worst_g_bar) {
      summary.worst_g_bar = outcomes[i].g_bar;
      summary.worst_channel = channels[i];
    }
  }
  return summary;
}

std::vector<BoundSearchRecord> bound_approach_search(
    const std::vector<double>& lambda12_values, unsigned threads) {
  constexpr int kGrid = 60;
  constexpr double kLog02Min = 0.0;  // lambda02 in [1, 1e4]
  constexpr double kLog02Max = 4.0;
  constexpr double kLog01Max = 7.0;  // lambda01 <= 1e7
  constexpr double kMinStep = 1e-7;
  constexpr int kMaxMoves = 5000;
  const double kNoValue = -std::numeric_limits<double>::infinity();

  std::vector<BoundSearchRecord> out;
  for (double l12 : lambda12_values) {
    require_positive(l12, "lambda12");

    auto objective = [&](double x, double y) {
      if (!(x > y) || y < kLog02Min || y > kLog02Max || x > kLog01Max) {
        return kNoValue;
      }
      const SnrTriple s =
          SnrTriple::make(std::pow(10.0, x), std::pow(10.0, y), l12);
      if (classify_regime(s) != Regime::kRelayAdvantaged) return kNoValue;
      return gap_report(s).g_bar;
    };

    struct Cell {
      double x = 0.0;
      double y = 0.0;
      double value = 0.0;
    };
    std::vector<Cell> cells(kGrid * kGrid);
    parallel_for(cells.size(), resolve_threads(threads), [&](std::size_t k) {
      const int j = static_cast<int>(k) / kGrid;
      const int i = static_cast<int>(k) % kGrid + 1;
      const double y = kLog02Min + (kLog02Max - kLog02Min) * j / (kGrid - 1);
      const double x = y + (kLog01Max - y) * i / kGrid;
      cells[k] = {x, y, objective(x, y)};
    });
    Cell best = cells.front();
    for (const Cell& c : cells) {
      if (c.value > best.value) best = c;
    }

    double step_x = (kLog01Max - best.y) / kGrid;
    double step_y = (kLog02Max - kLog02Min) / (kGrid - 1);
    for (int moves = 0; moves < kMaxMoves && std::max(step_x, step_y) >= kMinStep;
         ++moves) {
      const std::pair<double, double> trial[] = {
          {best.x + step_x, best.y}, {best.x - step_x, best.y},
          {best.x, best.y + step_y}, {best.x, best.y - step_y}};
      bool improved = false;
      for (const auto& [x, y] : trial) {
        const double v = objective(x, y);
        if (v > best.value) {
          best = {x, y, v};
          improved = true;
          break;
        }
      }
      if (!improved) {
        step_x /= 2.0;
        step_y /= 2.0;
      }
    }
    out.push_back({l12, std::pow(10.0, best.x), std::pow(10.0, best.y),
                   best.value});
  }
  return out;
}

}  // namespace relaylab
