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

#include <span>
#include <vector>

#include "edge_embed/embedder.hpp"
#include "edge_embed/embedding.hpp"
#include "edge_embed/model.hpp"
#include "edge_embed/pathfind.hpp"

namespace edge_embed {

/// The single minimum-coefficient path per ordered server pair, i.e. the
/// route a default shortest-path controller would pick. Ties keep the
/// canonically first path.
class PassiveRoutes {
 public:
  std::size_t server_count() const noexcept { return n_; }

  /// nullptr for src == dst.
  const SimplePath* path(ServerId src, ServerId dst) const;
  /// Zero for src == dst.
  double coefficient(ServerId src, ServerId dst) const;
  /// Mean coefficient over all N*N ordered pairs, same-server pairs
  /// contributing zero.
  double mean_coefficient() const noexcept { return mean_; }

 private:
  friend PassiveRoutes passive_routes(const PathCatalog&);

  std::size_t n_ = 0;
  double mean_ = 0.0;
  std::vector<SimplePath> paths_;
  std::vector<double> coefficients_;
};

PassiveRoutes passive_routes(const PathCatalog& catalog);

/// Whole stream on the passive route, no splitting.
class PassiveRouteTransit final : public TransitModel {
 public:
  explicit PassiveRouteTransit(const PassiveRoutes& routes) : routes_(routes) {}

  double transit_time(ServerId src, ServerId dst, double bits) const override;
  EdgeMapping mapping(ServerId src, ServerId dst, double bits) const override;

 private:
  const PassiveRoutes& routes_;
};

struct RankTable {
  std::vector<double> upward_rank;  // by function id, dummy included
  std::vector<double> avg_exec;     // by function id
  std::vector<double> avg_comm;     // by augmented edge index
};

/// HEFT priorities: mean execution time over servers, mean communication
/// time s * mean_coefficient(), and
/// rank(f) = avg_exec(f) + max over successors (avg_comm + rank(succ)).
RankTable upward_ranks(const AugmentedDag& dag, const EdgeNetwork& net,
                       const PassiveRoutes& routes);

/// List scheduling by decreasing upward rank onto the server with the
/// earliest finish time, using insertion into idle gaps of each server's
/// busy list. Streams follow the passive route. Unlike the DP embedders,
/// servers execute one function at a time.
EmbeddingResult heft_schedule(const AugmentedDag& dag, const EdgeNetwork& net,
                              const PassiveRoutes& routes,
                              std::span<const double> ready = {});

/// Same dynamic program as dpe_embed with every stream carried whole on its
/// passive route: placement is optimised, stream mapping is not.
EmbeddingResult placement_only_embed(const AugmentedDag& dag,
                                     const EdgeNetwork& net,
                                     const PathCatalog& catalog,
                                     const PassiveRoutes& routes,
                                     std::span<const double> ready = {});

}  // namespace edge_embed
