// Copyright 2026 The edge_embed Authors.
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

#include <cstdint>
#include <random>

namespace edge_embed {

/// Seedable generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Distributions are implemented here rather than via <random> adaptors,
/// whose algorithms are implementation-defined. Independent substreams are
/// derived from (seed, stream tag) with SplitMix64.
class Rng {
 public:
  enum class Stream : std::uint64_t {
    Topology = 1,
    ServerPower = 2,
    LinkBandwidth = 3,
    DagShape = 4,
    DagWeights = 5,
    Growth = 6,
  };

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, Stream stream);
  static std::uint64_t splitmix64(std::uint64_t x) noexcept;

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform on [lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi);
  /// Uniform integer on [lo, hi] by rejection sampling.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace edge_embed
