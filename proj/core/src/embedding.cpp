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

#include "edge_embed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edge_embed/error.hpp"

namespace edge_embed {

namespace {

void check_mapping(const EdgeMapping& m, const StreamEdge& edge, ServerId from,
                   ServerId to, const EdgeNetwork& net) {
  const std::string what =
      "edge " + std::to_string(edge.src) + "->" + std::to_string(edge.dst);
  if (m.same_server) {
    if (from != to) {
      throw EmbedError(ErrorCode::InvalidId,
                       what + " marked same-server across distinct servers");
    }
    return;
  }
  if (from == to) {
    throw EmbedError(ErrorCode::InvalidId,
                     what + " routes between co-located functions");
  }
  if (m.paths.empty() || m.paths.size() != m.allocations.size()) {
    throw EmbedError(ErrorCode::InvalidId, what + " has a malformed split");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < m.paths.size(); ++k) {
    const SimplePath& p = m.paths[k];
    if (p.nodes.size() < 2 || p.links.size() + 1 != p.nodes.size() ||
        p.nodes.front() != from || p.nodes.back() != to) {
      throw EmbedError(ErrorCode::InvalidId,
                       what + " path " + std::to_string(k) +
                           " does not join the placed servers");
    }
    for (std::size_t h = 0; h < p.links.size(); ++h) {
      const Link& l = net.link(p.links[h]);
      bool joins = (l.u == p.nodes[h] && l.v == p.nodes[h + 1]) ||
                   (l.v == p.nodes[h] && l.u == p.nodes[h + 1]);
      if (!joins) {
        throw EmbedError(ErrorCode::InvalidId,
                         what + " path " + std::to_string(k) +
                             " names a link that does not join its hop");
      }
    }
    if (m.allocations[k] < 0.0) {
      throw EmbedError(ErrorCode::InvalidId, what + " has a negative split");
    }
    total += m.allocations[k];
  }
  if (std::abs(total - edge.bits) > 1e-9 * edge.bits) {
    throw EmbedError(ErrorCode::InvalidId,
                     what + " split does not sum to the stream size");
  }
}

}  // namespace

double routing_time(const EdgeMapping& mapping, const EdgeNetwork& net) {
  if (mapping.same_server) return 0.0;
  double worst = 0.0;
  for (std::size_t k = 0; k < mapping.paths.size(); ++k) {
    worst = std::max(worst, path_coefficient(mapping.paths[k], net) *
                                mapping.allocations[k]);
  }
  return worst;
}

ReplayResult replay_embedding(const AugmentedDag& dag, const EdgeNetwork& net,
                              std::span<const ServerId> placements,
                              std::span<const EdgeMapping> mappings,
                              std::span<const double> ready) {
  if (placements.size() != dag.function_count() ||
      mappings.size() != dag.edges().size()) {
    throw EmbedError(ErrorCode::InvalidId,
                     "embedding does not cover every function and edge");
  }
  for (ServerId s : placements) {
    if (s >= net.server_count()) {
      throw EmbedError(ErrorCode::InvalidId, "placement names unknown server");
    }
  }
  ReplayResult out;
  out.start_times.assign(dag.function_count(), 0.0);
  out.finish_times.assign(dag.function_count(), 0.0);
  for (FunctionId f : dag.order()) {
    const ServerId here = placements[f];
    double start = 0.0;
    if (dag.is_entry(f)) {
      start = ready.empty() ? 0.0 : ready[here];
    } else {
      for (EdgeIndex e : dag.in_edges(f)) {
        const StreamEdge& edge = dag.edge(e);
        check_mapping(mappings[e], edge, placements[edge.src], here, net);
        start = std::max(start, out.finish_times[edge.src] +
                                    routing_time(mappings[e], net));
      }
    }
    out.start_times[f] = start;
    out.finish_times[f] = start + processing_time(dag.function(f), net.server(here));
  }
  out.makespan = out.finish_times[dag.dummy_id()];
  return out;
}

}  // namespace edge_embed
