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

#include "edge_embed/model.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "edge_embed/error.hpp"

namespace edge_embed {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

std::string cycle_string(const std::vector<FunctionId>& cycle) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) os << "->";
    os << cycle[i];
  }
  return os.str();
}

// Iterative three-colour DFS; returns a cycle witness (first node repeated at
// the end) or an empty vector.
std::vector<FunctionId> find_cycle(
    std::size_t n, const std::vector<std::vector<FunctionId>>& succ) {
  enum class Colour { White, Grey, Black };
  std::vector<Colour> colour(n, Colour::White);
  std::vector<FunctionId> parent(n, n);
  for (FunctionId root = 0; root < n; ++root) {
    if (colour[root] != Colour::White) continue;
    std::vector<std::pair<FunctionId, std::size_t>> stack{{root, 0}};
    colour[root] = Colour::Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < succ[node].size()) {
        FunctionId child = succ[node][next++];
        if (colour[child] == Colour::Grey) {
          std::vector<FunctionId> cycle{child};
          for (FunctionId cur = node; cur != child; cur = parent[cur]) {
            cycle.push_back(cur);
          }
          std::reverse(cycle.begin() + 1, cycle.end());
          cycle.push_back(child);
          return cycle;
        }
        if (colour[child] == Colour::White) {
          colour[child] = Colour::Grey;
          parent[child] = node;
          stack.emplace_back(child, 0);
        }
      } else {
        colour[node] = Colour::Black;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

void validate_network(std::span<const Server> servers,
                      std::span<const Link> links) {
  if (servers.empty()) {
    throw EmbedError(ErrorCode::InvalidId, "network has no servers");
  }
  for (std::size_t i = 0; i < servers.size(); ++i) {
    if (servers[i].id != i) {
      throw EmbedError(ErrorCode::InvalidId,
                       "server at index " + std::to_string(i) + " has id " +
                           std::to_string(servers[i].id));
    }
    if (!positive_finite(servers[i].psi)) {
      throw EmbedError(ErrorCode::NonPositiveParameter,
                       "server " + std::to_string(i) + " psi must be > 0");
    }
  }
  std::set<std::pair<ServerId, ServerId>> seen;
  std::vector<std::vector<ServerId>> adj(servers.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    const Link& l = links[i];
    if (l.id != i) {
      throw EmbedError(ErrorCode::InvalidId, "link at index " +
                                                 std::to_string(i) + " has id " +
                                                 std::to_string(l.id));
    }
    if (l.u >= servers.size() || l.v >= servers.size()) {
      throw EmbedError(ErrorCode::InvalidId,
                       "link " + std::to_string(i) + " names unknown server");
    }
    if (l.u == l.v) {
      throw EmbedError(ErrorCode::SelfLoop,
                       "link " + std::to_string(i) + " is a self-loop");
    }
    if (!positive_finite(l.throughput)) {
      throw EmbedError(ErrorCode::NonPositiveParameter,
                       "link " + std::to_string(i) + " throughput must be > 0");
    }
    auto key = std::minmax(l.u, l.v);
    if (!seen.insert(key).second) {
      throw EmbedError(ErrorCode::DuplicateLink,
                       "link " + std::to_string(i) + " duplicates servers " +
                           std::to_string(key.first) + "-" +
                           std::to_string(key.second));
    }
    adj[l.u].push_back(l.v);
    adj[l.v].push_back(l.u);
  }
  std::vector<bool> reached(servers.size(), false);
  std::vector<ServerId> frontier{0};
  reached[0] = true;
  while (!frontier.empty()) {
    ServerId n = frontier.back();
    frontier.pop_back();
    for (ServerId m : adj[n]) {
      if (!reached[m]) {
        reached[m] = true;
        frontier.push_back(m);
      }
    }
  }
  for (ServerId n = 0; n < servers.size(); ++n) {
    if (!reached[n]) {
      throw EmbedError(ErrorCode::Disconnected,
                       "server " + std::to_string(n) +
                           " is unreachable from server 0");
    }
  }
}

EdgeNetwork::EdgeNetwork(std::vector<Server> servers, std::vector<Link> links)
    : servers_(std::move(servers)), links_(std::move(links)) {
  validate_network(servers_, links_);
  adjacency_.resize(servers_.size());
  for (const Link& l : links_) {
    adjacency_[l.u].push_back({l.v, l.id});
    adjacency_[l.v].push_back({l.u, l.id});
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.server < b.server;
    });
  }
}

std::optional<LinkId> EdgeNetwork::link_between(ServerId a, ServerId b) const {
  for (const Neighbor& nb : adjacency_.at(a)) {
    if (nb.server == b) return nb.link;
  }
  return std::nullopt;
}

void validate_dag(std::span<const FunctionNode> functions_in_order,
                  std::span<const StreamEdge> edges) {
  const std::size_t n = functions_in_order.size();
  if (n == 0) throw EmbedError(ErrorCode::EmptyDag, "DAG has no functions");

  std::vector<std::size_t> position(n, n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const FunctionNode& f = functions_in_order[pos];
    if (f.id >= n || position[f.id] != n) {
      throw EmbedError(ErrorCode::InvalidId,
                       "function ids must be dense and unique; bad id " +
                           std::to_string(f.id));
    }
    position[f.id] = pos;
    if (!std::isfinite(f.flops) || f.flops < 0.0) {
      throw EmbedError(ErrorCode::NegativeFlops,
                       "function " + std::to_string(f.id) + " flops must be >= 0");
    }
    if (f.is_dummy && f.flops != 0.0) {
      throw EmbedError(ErrorCode::NegativeFlops,
                       "dummy function " + std::to_string(f.id) +
                           " must have zero flops");
    }
  }

  std::set<std::pair<FunctionId, FunctionId>> seen;
  std::vector<std::vector<FunctionId>> succ(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const StreamEdge& edge = edges[e];
    if (edge.src >= n || edge.dst >= n) {
      throw EmbedError(ErrorCode::InvalidId,
                       "edge " + std::to_string(e) + " names unknown function");
    }
    if (!positive_finite(edge.bits)) {
      throw EmbedError(ErrorCode::NonPositiveStream,
                       "edge " + std::to_string(edge.src) + "->" +
                           std::to_string(edge.dst) + " size must be > 0");
    }
    if (!seen.insert({edge.src, edge.dst}).second) {
      throw EmbedError(ErrorCode::DuplicateEdge,
                       "edge " + std::to_string(edge.src) + "->" +
                           std::to_string(edge.dst) + " appears twice");
    }
    succ[edge.src].push_back(edge.dst);
  }

  if (auto cycle = find_cycle(n, succ); !cycle.empty()) {
    throw EmbedError(ErrorCode::CycleDetected, "cycle " + cycle_string(cycle));
  }
  for (const StreamEdge& edge : edges) {
    if (position[edge.src] >= position[edge.dst]) {
      throw EmbedError(ErrorCode::OrderViolation,
                       "edge " + std::to_string(edge.src) + "->" +
                           std::to_string(edge.dst) +
                           " goes against the stored order");
    }
  }
}

WorkloadDag::WorkloadDag(std::vector<FunctionNode> functions_in_order,
                         std::vector<StreamEdge> edges)
    : edges_(std::move(edges)) {
  validate_dag(functions_in_order, edges_);
  const std::size_t n = functions_in_order.size();
  functions_.resize(n);
  position_.resize(n);
  order_.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const FunctionNode& f = functions_in_order[pos];
    functions_[f.id] = f;
    position_[f.id] = pos;
    order_.push_back(f.id);
  }
  in_.resize(n);
  out_.resize(n);
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].src].push_back(e);
    in_[edges_[e].dst].push_back(e);
  }
}

bool WorkloadDag::has_dummy() const {
  return std::any_of(functions_.begin(), functions_.end(),
                     [](const FunctionNode& f) { return f.is_dummy; });
}

std::vector<FunctionId> WorkloadDag::entries() const {
  std::vector<FunctionId> out;
  for (FunctionId f : order_) {
    if (is_entry(f)) out.push_back(f);
  }
  return out;
}

std::vector<FunctionId> WorkloadDag::destinations() const {
  std::vector<FunctionId> out;
  for (FunctionId f : order_) {
    if (is_destination(f)) out.push_back(f);
  }
  return out;
}

AugmentedDag::AugmentedDag(WorkloadDag base, std::vector<StreamEdge> dummy_edges)
    : base_(std::move(base)) {
  dummy_ = FunctionNode{base_.size(), 0.0, true};
  order_.assign(base_.order().begin(), base_.order().end());
  order_.push_back(dummy_.id);
  edges_.assign(base_.edges().begin(), base_.edges().end());
  edges_.insert(edges_.end(), dummy_edges.begin(), dummy_edges.end());
  in_.resize(function_count());
  out_.resize(function_count());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].src].push_back(e);
    in_[edges_[e].dst].push_back(e);
  }
}

const FunctionNode& AugmentedDag::function(FunctionId id) const {
  return id == dummy_.id ? dummy_ : base_.function(id);
}

WorkloadDag AugmentedDag::as_workload() const {
  std::vector<FunctionNode> nodes;
  nodes.reserve(function_count());
  for (FunctionId f : order_) nodes.push_back(function(f));
  return WorkloadDag(std::move(nodes), edges_);
}

AugmentedDag augment_dummy_tail(const WorkloadDag& dag,
                                const OutputSizes& dst_out_sizes) {
  if (dag.has_dummy()) {
    throw EmbedError(ErrorCode::AlreadyAugmented,
                     "DAG already contains a dummy tail function");
  }
  const FunctionId dummy = dag.size();
  std::vector<StreamEdge> dummy_edges;
  for (FunctionId f : dag.destinations()) {
    auto it = dst_out_sizes.find(f);
    if (it == dst_out_sizes.end()) {
      throw EmbedError(ErrorCode::MissingOutputSize,
                       "destination function " + std::to_string(f) +
                           " has no output size");
    }
    if (!positive_finite(it->second)) {
      throw EmbedError(ErrorCode::NonPositiveStream,
                       "output size of function " + std::to_string(f) +
                           " must be > 0");
    }
    dummy_edges.push_back({f, dummy, it->second});
  }
  for (const auto& [f, bits] : dst_out_sizes) {
    if (f >= dag.size() || !dag.is_destination(f)) {
      throw EmbedError(ErrorCode::InvalidId,
                       "output size given for non-destination function " +
                           std::to_string(f));
    }
  }
  return AugmentedDag(dag, std::move(dummy_edges));
}

double processing_time(const FunctionNode& f, const Server& server) noexcept {
  if (f.is_dummy) return 0.0;
  return f.flops / server.psi;
}

}  // namespace edge_embed
