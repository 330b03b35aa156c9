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
#include <string>
#include <vector>

#include "edge_embed/model.hpp"
#include "edge_embed/pathfind.hpp"

namespace edge_embed {

/// How one logical stream is carried: either both endpoints share a server
/// (no transit) or the stream is split over concrete paths.
struct EdgeMapping {
  bool same_server = true;
  std::vector<SimplePath> paths;
  std::vector<double> allocations;  // bits per path

  static EdgeMapping local() { return EdgeMapping{}; }
};

/// Slowest branch of the mapping; zero for a same-server mapping.
double routing_time(const EdgeMapping& mapping, const EdgeNetwork& net);

struct EmbeddingResult {
  std::string algorithm;
  std::vector<ServerId> placements;        // by function id, dummy included
  std::vector<EdgeMapping> edge_mappings;  // by augmented edge index
  std::vector<double> start_times;         // by function id
  std::vector<double> finish_times;        // by function id
  double makespan = 0.0;
};

struct ReplayResult {
  std::vector<double> start_times;
  std::vector<double> finish_times;
  double makespan = 0.0;
};

/// Forward evaluation of the finish-time recurrence for a fixed embedding:
/// entry functions finish at ready + c/psi, every other function at
/// max over predecessors (finish + routing time) plus its own processing
/// time. Servers are not treated as exclusive resources.
///
/// Throws EmbedError(InvalidId) if the mappings do not match the placements
/// (wrong endpoints, broken paths, or splits not summing to the stream size
/// within 1e-9 relative).
ReplayResult replay_embedding(const AugmentedDag& dag, const EdgeNetwork& net,
                              std::span<const ServerId> placements,
                              std::span<const EdgeMapping> mappings,
                              std::span<const double> ready = {});

}  // namespace edge_embed
