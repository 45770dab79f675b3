// Copyright 2026 The lowrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lowrank {

/// SplitMix64 mixing step. Used to derive independent sub-stream seeds so
/// that, e.g., the mask stream of instance 3 never depends on how many draws
/// the low-rank stream consumed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Combines a base seed with up to two stream identifiers into a new seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

/// Deterministic random source: a std::mt19937_64 engine (bit-exact sequence
/// fixed by the standard) with uniform doubles taken from the top 53 bits and
/// Gaussian variates produced by the Box-Muller transform. No
/// std::*_distribution is used anywhere, so identical seeds give identical
/// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Child stream keyed by (a, b); independent of this stream's draw count.
  Rng stream(std::uint64_t a, std::uint64_t b = 0) const {
    return Rng(derive_seed(seed_of_construction_, a, b));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Standard normal via Box-Muller; generates pairs, caches the second.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so that log(u1) is finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_of_construction_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;

  friend class RngAccess;

 public:
  // Keeps the construction seed so stream() derivations are reproducible
  // regardless of how many values were drawn from this instance.
  static Rng seeded(std::uint64_t seed) {
    Rng r(seed);
    r.seed_of_construction_ = seed;
    return r;
  }
};

}  // namespace lowrank
