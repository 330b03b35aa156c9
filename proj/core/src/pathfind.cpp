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

#include "edge_embed/pathfind.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "edge_embed/error.hpp"

namespace edge_embed {

namespace {

// Recursive path finder. Mirrors the textbook formulation: the current path
// and visited set are shared across the recursion; a node is pushed on entry
// and popped once all of its unvisited neighbours have been explored.
class PathFinder {
 public:
  PathFinder(const EdgeNetwork& net, ServerId dst, std::size_t max_paths)
      : net_(net), dst_(dst), max_paths_(max_paths),
        visited_(net.server_count(), false) {}

  void run(ServerId src) { visit(src, std::nullopt); }

  std::vector<SimplePath> take_paths() { return std::move(found_); }
  std::uint64_t calls() const noexcept { return calls_; }

 private:
  void visit(ServerId node, std::optional<LinkId> via) {
    ++calls_;
    if (via) links_.push_back(*via);
    if (node == dst_) {
      SimplePath p;
      p.nodes = nodes_;
      p.nodes.push_back(node);
      p.links = links_;
      found_.push_back(std::move(p));
      if (found_.size() > max_paths_) {
        throw EmbedError(ErrorCode::PathExplosion,
                         "more than " + std::to_string(max_paths_) +
                             " simple paths; lower connectivity or server count, "
                             "or raise EDGE_EMBED_PATH_CAP");
      }
    } else {
      nodes_.push_back(node);
      visited_[node] = true;
      for (const Neighbor& nb : net_.neighbors(node)) {
        if (!visited_[nb.server]) visit(nb.server, nb.link);
      }
      nodes_.pop_back();
      visited_[node] = false;
    }
    if (via) links_.pop_back();
  }

  const EdgeNetwork& net_;
  ServerId dst_;
  std::size_t max_paths_;
  std::vector<bool> visited_;
  std::vector<ServerId> nodes_;
  std::vector<LinkId> links_;
  std::vector<SimplePath> found_;
  std::uint64_t calls_ = 0;
};

}  // namespace

bool canonical_less(const SimplePath& a, const SimplePath& b) noexcept {
  if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
  return a.nodes < b.nodes;
}

std::vector<SimplePath> enumerate_simple_paths(const EdgeNetwork& net,
                                               ServerId src, ServerId dst,
                                               EnumerationStats* stats,
                                               std::size_t max_paths) {
  if (src >= net.server_count() || dst >= net.server_count()) {
    throw EmbedError(ErrorCode::InvalidId, "unknown server in path query");
  }
  if (src == dst) {
    throw EmbedError(ErrorCode::SamePair,
                     "source and destination coincide (server " +
                         std::to_string(src) + ")");
  }
  PathFinder finder(net, dst, max_paths);
  finder.run(src);
  if (stats) stats->recursion_calls += finder.calls();
  auto paths = finder.take_paths();
  std::sort(paths.begin(), paths.end(), canonical_less);
  return paths;
}

double path_coefficient(const SimplePath& path, const EdgeNetwork& net) {
  double sum = 0.0;
  for (LinkId l : path.links) sum += 1.0 / net.link(l).throughput;
  return sum;
}

std::size_t PathCatalog::index(ServerId src, ServerId dst) const {
  if (src >= n_ || dst >= n_) {
    throw EmbedError(ErrorCode::InvalidId, "unknown server in catalog lookup");
  }
  return src * n_ + dst;
}

PathCatalog build_catalog(const EdgeNetwork& net, std::size_t path_cap) {
  PathCatalog catalog;
  catalog.n_ = net.server_count();
  catalog.pairs_.resize(catalog.n_ * catalog.n_);
  for (ServerId i = 0; i < catalog.n_; ++i) {
    for (ServerId j = 0; j < catalog.n_; ++j) {
      if (i == j) continue;
      auto& pair = catalog.pairs_[i * catalog.n_ + j];
      EnumerationStats stats;
      std::size_t budget = path_cap - catalog.total_paths_;
      try {
        pair.paths = enumerate_simple_paths(net, i, j, &stats, budget);
      } catch (const EmbedError& e) {
        if (e.code() != ErrorCode::PathExplosion) throw;
        throw EmbedError(ErrorCode::PathExplosion,
                         "catalog exceeds the cap of " +
                             std::to_string(path_cap) +
                             " paths; lower connectivity or server count, or "
                             "raise EDGE_EMBED_PATH_CAP");
      }
      pair.recursion_calls = stats.recursion_calls;
      pair.coefficients.reserve(pair.paths.size());
      for (const SimplePath& p : pair.paths) {
        double a = path_coefficient(p, net);
        pair.coefficients.push_back(a);
        pair.inverse_sum += 1.0 / a;
      }
      catalog.total_paths_ += pair.paths.size();
    }
  }
  return catalog;
}

std::size_t path_cap_from_env() {
  if (const char* raw = std::getenv("EDGE_EMBED_PATH_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return PathCatalog::kDefaultPathCap;
}

}  // namespace edge_embed
