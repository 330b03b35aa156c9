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

#include "edge_embed/baselines.hpp"

#include <algorithm>
#include <limits>

#include "edge_embed/error.hpp"

namespace edge_embed {

PassiveRoutes passive_routes(const PathCatalog& catalog) {
  PassiveRoutes r;
  r.n_ = catalog.server_count();
  r.paths_.resize(r.n_ * r.n_);
  r.coefficients_.assign(r.n_ * r.n_, 0.0);
  double total = 0.0;
  for (ServerId i = 0; i < r.n_; ++i) {
    for (ServerId j = 0; j < r.n_; ++j) {
      if (i == j) continue;
      auto coeffs = catalog.coefficients(i, j);
      auto paths = catalog.paths(i, j);
      // Paths are already canonical, so the first minimum wins ties.
      auto best = std::min_element(coeffs.begin(), coeffs.end());
      auto k = static_cast<std::size_t>(best - coeffs.begin());
      r.paths_[i * r.n_ + j] = paths[k];
      r.coefficients_[i * r.n_ + j] = *best;
      total += *best;
    }
  }
  r.mean_ = total / static_cast<double>(r.n_ * r.n_);
  return r;
}

const SimplePath* PassiveRoutes::path(ServerId src, ServerId dst) const {
  if (src >= n_ || dst >= n_) {
    throw EmbedError(ErrorCode::InvalidId, "unknown server in route lookup");
  }
  if (src == dst) return nullptr;
  return &paths_[src * n_ + dst];
}

double PassiveRoutes::coefficient(ServerId src, ServerId dst) const {
  if (src >= n_ || dst >= n_) {
    throw EmbedError(ErrorCode::InvalidId, "unknown server in route lookup");
  }
  return coefficients_[src * n_ + dst];
}

double PassiveRouteTransit::transit_time(ServerId src, ServerId dst,
                                         double bits) const {
  if (src == dst) return 0.0;
  return bits * routes_.coefficient(src, dst);
}

EdgeMapping PassiveRouteTransit::mapping(ServerId src, ServerId dst,
                                         double bits) const {
  if (src == dst) return EdgeMapping::local();
  EdgeMapping m;
  m.same_server = false;
  m.paths.push_back(*routes_.path(src, dst));
  m.allocations.push_back(bits);
  return m;
}

RankTable upward_ranks(const AugmentedDag& dag, const EdgeNetwork& net,
                       const PassiveRoutes& routes) {
  RankTable t;
  const std::size_t q = dag.function_count();
  t.avg_exec.assign(q, 0.0);
  t.upward_rank.assign(q, 0.0);
  for (FunctionId f = 0; f < q; ++f) {
    double sum = 0.0;
    for (const Server& s : net.servers()) {
      sum += processing_time(dag.function(f), s);
    }
    t.avg_exec[f] = sum / static_cast<double>(net.server_count());
  }
  t.avg_comm.reserve(dag.edges().size());
  for (const StreamEdge& e : dag.edges()) {
    t.avg_comm.push_back(e.bits * routes.mean_coefficient());
  }
  auto order = dag.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const FunctionId f = *it;
    double tail = 0.0;
    for (EdgeIndex e : dag.out_edges(f)) {
      tail = std::max(tail, t.avg_comm[e] + t.upward_rank[dag.edge(e).dst]);
    }
    t.upward_rank[f] = t.avg_exec[f] + tail;
  }
  return t;
}

namespace {

struct Busy {
  double start;
  double end;
};

// Earliest start >= ready at which `duration` fits into the gaps of `busy`
// (sorted by start, non-overlapping).
double earliest_slot(const std::vector<Busy>& busy, double ready,
                     double duration) {
  double candidate = ready;
  for (const Busy& b : busy) {
    if (b.end <= candidate) continue;
    if (candidate + duration <= b.start) return candidate;
    candidate = std::max(candidate, b.end);
  }
  return candidate;
}

}  // namespace

EmbeddingResult heft_schedule(const AugmentedDag& dag, const EdgeNetwork& net,
                              const PassiveRoutes& routes,
                              std::span<const double> ready) {
  const std::size_t q = dag.function_count();
  const std::size_t n = net.server_count();
  if (!ready.empty() && ready.size() != n) {
    throw EmbedError(ErrorCode::InvalidId, "ready times must name every server");
  }
  const RankTable ranks = upward_ranks(dag, net, routes);

  // Stable sort over the topological order: equal ranks keep precedence.
  std::vector<FunctionId> priority(dag.order().begin(), dag.order().end());
  std::stable_sort(priority.begin(), priority.end(),
                   [&](FunctionId a, FunctionId b) {
                     return ranks.upward_rank[a] > ranks.upward_rank[b];
                   });

  PassiveRouteTransit transit(routes);
  std::vector<std::vector<Busy>> busy(n);
  std::vector<ServerId> placement(q, 0);
  std::vector<double> start(q, 0.0);
  std::vector<double> finish(q, 0.0);

  for (FunctionId f : priority) {
    double best_finish = std::numeric_limits<double>::infinity();
    double best_start = 0.0;
    ServerId best_server = 0;
    for (ServerId s = 0; s < n; ++s) {
      double data_ready = ready.empty() ? 0.0 : ready[s];
      if (!dag.is_entry(f)) {
        data_ready = 0.0;
        for (EdgeIndex e : dag.in_edges(f)) {
          const StreamEdge& edge = dag.edge(e);
          data_ready = std::max(data_ready,
                                finish[edge.src] + transit.transit_time(
                                                       placement[edge.src], s,
                                                       edge.bits));
        }
      }
      const double duration = processing_time(dag.function(f), net.server(s));
      const double st = earliest_slot(busy[s], data_ready, duration);
      if (st + duration < best_finish) {
        best_finish = st + duration;
        best_start = st;
        best_server = s;
      }
    }
    placement[f] = best_server;
    start[f] = best_start;
    finish[f] = best_finish;
    if (best_finish > best_start) {
      auto& list = busy[best_server];
      auto at = std::lower_bound(
          list.begin(), list.end(), best_start,
          [](const Busy& b, double t) { return b.start < t; });
      list.insert(at, Busy{best_start, best_finish});
    }
  }

  EmbeddingResult r;
  r.algorithm = "heft";
  r.edge_mappings.reserve(dag.edges().size());
  for (const StreamEdge& e : dag.edges()) {
    r.edge_mappings.push_back(
        transit.mapping(placement[e.src], placement[e.dst], e.bits));
  }
  r.placements = std::move(placement);
  r.start_times = std::move(start);
  r.finish_times = std::move(finish);
  r.makespan = r.finish_times[dag.dummy_id()];
  return r;
}

EmbeddingResult placement_only_embed(const AugmentedDag& dag,
                                     const EdgeNetwork& net,
                                     const PathCatalog& /*catalog*/,
                                     const PassiveRoutes& routes,
                                     std::span<const double> ready) {
  return dp_embed(dag, net, PassiveRouteTransit(routes), ready,
                  "placement-only");
}

}  // namespace edge_embed
