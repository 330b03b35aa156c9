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
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace edge_embed {

using ServerId = std::size_t;
using LinkId = std::size_t;
using FunctionId = std::size_t;
using EdgeIndex = std::size_t;

struct Server {
  ServerId id = 0;
  double psi = 0.0;  // flop/s
};

/// Undirected link; the same throughput applies in both directions.
struct Link {
  LinkId id = 0;
  ServerId u = 0;
  ServerId v = 0;
  double throughput = 0.0;  // bit/s
};

struct Neighbor {
  ServerId server = 0;
  LinkId link = 0;
};

/// Undirected connected graph of heterogeneous edge servers.
///
/// Construction validates the graph and throws EmbedError on failure; a
/// constructed network is immutable. Server and link ids are dense and equal
/// to their index in the respective vectors.
class EdgeNetwork {
 public:
  EdgeNetwork(std::vector<Server> servers, std::vector<Link> links);

  std::size_t server_count() const noexcept { return servers_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }

  const Server& server(ServerId id) const { return servers_.at(id); }
  const Link& link(LinkId id) const { return links_.at(id); }
  std::span<const Server> servers() const noexcept { return servers_; }
  std::span<const Link> links() const noexcept { return links_; }

  /// Adjacent servers of `id`, sorted by neighbor server id.
  std::span<const Neighbor> neighbors(ServerId id) const {
    return adjacency_.at(id);
  }

  std::optional<LinkId> link_between(ServerId a, ServerId b) const;

 private:
  std::vector<Server> servers_;
  std::vector<Link> links_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Throws EmbedError (Disconnected, NonPositiveParameter, DuplicateLink,
/// SelfLoop, InvalidId) if the description is not a valid edge network.
void validate_network(std::span<const Server> servers,
                      std::span<const Link> links);

struct FunctionNode {
  FunctionId id = 0;
  double flops = 0.0;
  bool is_dummy = false;
};

struct StreamEdge {
  FunctionId src = 0;
  FunctionId dst = 0;
  double bits = 0.0;
};

/// Workload DAG whose functions are listed in a topological order.
///
/// Functions are addressed by id (dense, 0-based); `order()` is the stored
/// topological order. Edges keep the caller's ordering.
class WorkloadDag {
 public:
  WorkloadDag(std::vector<FunctionNode> functions_in_order,
              std::vector<StreamEdge> edges);

  std::size_t size() const noexcept { return functions_.size(); }
  const FunctionNode& function(FunctionId id) const { return functions_.at(id); }
  std::span<const FunctionId> order() const noexcept { return order_; }
  std::size_t position(FunctionId id) const { return position_.at(id); }

  std::span<const StreamEdge> edges() const noexcept { return edges_; }
  const StreamEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const EdgeIndex> in_edges(FunctionId id) const { return in_.at(id); }
  std::span<const EdgeIndex> out_edges(FunctionId id) const { return out_.at(id); }

  bool is_entry(FunctionId id) const { return in_.at(id).empty(); }
  bool is_destination(FunctionId id) const { return out_.at(id).empty(); }
  bool has_dummy() const;

  /// Entry / destination functions in topological order.
  std::vector<FunctionId> entries() const;
  std::vector<FunctionId> destinations() const;

 private:
  std::vector<FunctionNode> functions_;  // indexed by id
  std::vector<FunctionId> order_;
  std::vector<std::size_t> position_;
  std::vector<StreamEdge> edges_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::vector<std::vector<EdgeIndex>> out_;
};

/// Throws EmbedError (EmptyDag, InvalidId, NegativeFlops, NonPositiveStream,
/// DuplicateEdge, CycleDetected, OrderViolation). Cycle detection runs
/// before the order check so a cyclic input is always reported as a cycle.
void validate_dag(std::span<const FunctionNode> functions_in_order,
                  std::span<const StreamEdge> edges);

using OutputSizes = std::map<FunctionId, double>;

/// A workload DAG with the zero-cost tail function appended after every
/// destination function. The dummy is last in the order and is the unique
/// destination; its in-edges carry the destinations' output sizes.
class AugmentedDag {
 public:
  const WorkloadDag& base() const noexcept { return base_; }
  FunctionId dummy_id() const noexcept { return base_.size(); }
  std::size_t function_count() const noexcept { return base_.size() + 1; }

  const FunctionNode& function(FunctionId id) const;
  std::span<const FunctionId> order() const noexcept { return order_; }

  /// Original edges first (same indices as in base()), then dummy edges.
  std::span<const StreamEdge> edges() const noexcept { return edges_; }
  const StreamEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const StreamEdge> dummy_edges() const noexcept {
    return std::span<const StreamEdge>(edges_).subspan(base_.edges().size());
  }
  std::span<const EdgeIndex> in_edges(FunctionId id) const { return in_.at(id); }
  std::span<const EdgeIndex> out_edges(FunctionId id) const { return out_.at(id); }
  bool is_entry(FunctionId id) const { return in_.at(id).empty(); }

  /// The augmented graph as a plain WorkloadDag (dummy flagged). Feeding it
  /// back into augment_dummy_tail is rejected.
  WorkloadDag as_workload() const;

 private:
  friend AugmentedDag augment_dummy_tail(const WorkloadDag&, const OutputSizes&);
  AugmentedDag(WorkloadDag base, std::vector<StreamEdge> dummy_edges);

  WorkloadDag base_;
  FunctionNode dummy_;
  std::vector<FunctionId> order_;
  std::vector<StreamEdge> edges_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::vector<std::vector<EdgeIndex>> out_;
};

/// Appends the dummy tail. `dst_out_sizes` must name every destination
/// function (and nothing else) with a positive size.
AugmentedDag augment_dummy_tail(const WorkloadDag& dag,
                                const OutputSizes& dst_out_sizes);

/// c / psi; exactly zero for the dummy function.
double processing_time(const FunctionNode& f, const Server& server) noexcept;

}  // namespace edge_embed
