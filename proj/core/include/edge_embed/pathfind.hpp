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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "edge_embed/model.hpp"

namespace edge_embed {

/// A loop-free walk through the network. `links[k]` joins `nodes[k]` and
/// `nodes[k + 1]`.
struct SimplePath {
  std::vector<ServerId> nodes;
  std::vector<LinkId> links;

  std::size_t hop_count() const noexcept { return links.size(); }
  friend bool operator==(const SimplePath&, const SimplePath&) = default;
};

/// Canonical order: fewer hops first, then lexicographic node sequence.
bool canonical_less(const SimplePath& a, const SimplePath& b) noexcept;

struct EnumerationStats {
  std::uint64_t recursion_calls = 0;
};

/// All simple paths from `src` to `dst`, each exactly once, in canonical
/// order. Depth-first recursion with a visited set that is pushed on entry
/// and popped on exit.
///
/// Throws SamePair when src == dst and PathExplosion when more than
/// `max_paths` paths exist (enumeration stops as soon as the cap is crossed).
std::vector<SimplePath> enumerate_simple_paths(
    const EdgeNetwork& net, ServerId src, ServerId dst,
    EnumerationStats* stats = nullptr,
    std::size_t max_paths = std::numeric_limits<std::size_t>::max());

/// Seconds per bit along the path: sum of 1/b over its links, left to right.
double path_coefficient(const SimplePath& path, const EdgeNetwork& net);

/// Every simple path between every ordered pair of distinct servers, with
/// per-path coefficients and their harmonic aggregate precomputed.
class PathCatalog {
 public:
  static constexpr std::size_t kDefaultPathCap = 1'000'000;

  std::size_t server_count() const noexcept { return n_; }
  std::size_t total_paths() const noexcept { return total_paths_; }

  std::span<const SimplePath> paths(ServerId src, ServerId dst) const {
    return pairs_.at(index(src, dst)).paths;
  }
  std::span<const double> coefficients(ServerId src, ServerId dst) const {
    return pairs_.at(index(src, dst)).coefficients;
  }
  /// Sum over the pair's paths of 1/coefficient; zero for src == dst.
  double inverse_coefficient_sum(ServerId src, ServerId dst) const {
    return pairs_.at(index(src, dst)).inverse_sum;
  }
  std::uint64_t recursion_calls(ServerId src, ServerId dst) const {
    return pairs_.at(index(src, dst)).recursion_calls;
  }

 private:
  friend PathCatalog build_catalog(const EdgeNetwork&, std::size_t);

  struct PairPaths {
    std::vector<SimplePath> paths;
    std::vector<double> coefficients;
    double inverse_sum = 0.0;
    std::uint64_t recursion_calls = 0;
  };

  std::size_t index(ServerId src, ServerId dst) const;

  std::size_t n_ = 0;
  std::size_t total_paths_ = 0;
  std::vector<PairPaths> pairs_;  // row-major, diagonal left empty
};

/// Throws PathExplosion once more than `path_cap` paths would be stored.
PathCatalog build_catalog(const EdgeNetwork& net,
                          std::size_t path_cap = PathCatalog::kDefaultPathCap);

/// Value of EDGE_EMBED_PATH_CAP if set to a positive integer, else the
/// default cap.
std::size_t path_cap_from_env();

}  // namespace edge_embed
