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

#ifndef RELAYLAB_RANDOM_H_
#define RELAYLAB_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <limits>

namespace relaylab {

// SplitMix64 (Steele, Lea and Flood; constants as published by Vigna).
// 64-bit state; each call advances the state by 0x9e3779b97f4a7c15 and
// returns a bijective mix of it:
//
//   state += 0x9e3779b97f4a7c15
//   z = state
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
//
// Seeds therefore reproduce across implementations.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // 10^U with U uniform on [log10 lo, log10 hi).
  double log_uniform(double lo, double hi) {
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    return std::pow(10.0, a + (b - a) * uniform());
  }

 private:
  std::uint64_t state_;
};

}  // namespace relaylab

#endif  // RELAYLAB_RANDOM_H_
