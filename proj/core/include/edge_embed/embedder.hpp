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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edge_embed/embedding.hpp"
#include "edge_embed/model.hpp"
#include "edge_embed/pathfind.hpp"
#include "edge_embed/splitter.hpp"

namespace edge_embed {

/// Cost of moving a stream between two servers, and the mapping that
/// realises it. Implementations must return zero / a local mapping when
/// src == dst.
class TransitModel {
 public:
  virtual ~TransitModel() = default;
  virtual double transit_time(ServerId src, ServerId dst, double bits) const = 0;
  virtual EdgeMapping mapping(ServerId src, ServerId dst, double bits) const = 0;
};

/// Proactive mapping: the stream is split over every simple path between the
/// two servers with the closed-form optimal allocation.
class OptimalSplitTransit final : public TransitModel {
 public:
  explicit OptimalSplitTransit(const PathCatalog& catalog) : catalog_(catalog) {}

  double transit_time(ServerId src, ServerId dst, double bits) const override;
  EdgeMapping mapping(ServerId src, ServerId dst, double bits) const override;
  SplitSolution split(ServerId src, ServerId dst, double bits) const;

 private:
  const PathCatalog& catalog_;
};

/// DP state: earliest finish time of each function on each server, the
/// committed placement of shared predecessors and per-server ready times.
struct ScheduleState {
  std::vector<std::vector<double>> best_finish;  // [function][server]; NaN = unset
  std::vector<std::optional<ServerId>> decided_placement;
  std::vector<double> server_ready;

  /// Empty `ready` means every server is idle at t = 0.
  static ScheduleState create(const AugmentedDag& dag, const EdgeNetwork& net,
                              std::span<const double> ready = {});

  bool populated(FunctionId f) const;
};

struct SubproblemResult {
  double phi = 0.0;
  ServerId src_server = 0;
  std::vector<SimplePath> paths;  // empty when src_server == fixed_dst
  SplitSolution split;
  double transit = 0.0;
};

/// best_finish[f][n] = c_f / psi_n + server_ready[n] for every server.
/// Throws NotEntry if `f` has predecessors.
void entry_finish_times(const AugmentedDag& dag, const EdgeNetwork& net,
                        ScheduleState& state, FunctionId f);

/// Best source placement for one edge with the destination's server fixed.
///
/// If the predecessor is already committed only that server is evaluated;
/// otherwise every server is a candidate and the smallest phi wins (ties go
/// to the smallest server id). Throws UnpopulatedPredecessor if neither the
/// finish times nor a committed placement are available.
SubproblemResult solve_subproblem(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const PathCatalog& catalog,
                                  const ScheduleState& state, EdgeIndex edge,
                                  ServerId fixed_dst);

SubproblemResult solve_subproblem(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const TransitModel& transit,
                                  const ScheduleState& state, EdgeIndex edge,
                                  ServerId fixed_dst);

/// Dynamic program over the stored topological order using `transit` for
/// every stream. dpe_embed and the placement-only baseline both run on this.
EmbeddingResult dp_embed(const AugmentedDag& dag, const EdgeNetwork& net,
                         const TransitModel& transit,
                         std::span<const double> ready, std::string algorithm);

/// Joint placement and multipath stream mapping with optimal splitting.
EmbeddingResult dpe_embed(const AugmentedDag& dag, const EdgeNetwork& net,
                          const PathCatalog& catalog,
                          std::span<const double> ready = {});

inline constexpr std::size_t kBruteForceLimit = 1'000'000;

/// Exhaustive search over every placement vector (dummy included), each
/// edge mapped with `transit`. Ties keep the lexicographically smallest
/// placement vector. Throws TooLarge when N^(Q+1) exceeds kBruteForceLimit.
EmbeddingResult brute_force_embed(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const TransitModel& transit,
                                  std::span<const double> ready = {});

EmbeddingResult brute_force_embed(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const PathCatalog& catalog,
                                  std::span<const double> ready = {});

}  // namespace edge_embed
