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

#include "edge_embed/embedder.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "edge_embed/error.hpp"

namespace edge_embed {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct Candidate {
  double phi = 0.0;
  ServerId src = 0;
  double transit = 0.0;
};

// Core of the subproblem: best source server for `edge` given the
// destination's placement. Reads the state only.
Candidate best_source(const AugmentedDag& dag, const EdgeNetwork& net,
                      const TransitModel& transit, const ScheduleState& state,
                      EdgeIndex edge, ServerId fixed_dst) {
  const StreamEdge& e = dag.edge(edge);
  const double proc = processing_time(dag.function(e.dst), net.server(fixed_dst));
  const auto& finish = state.best_finish.at(e.src);

  if (const auto& decided = state.decided_placement.at(e.src)) {
    const ServerId m = *decided;
    const double t = transit.transit_time(m, fixed_dst, e.bits);
    return {finish[m] + t + proc, m, t};
  }
  if (!state.populated(e.src)) {
    throw EmbedError(ErrorCode::UnpopulatedPredecessor,
                     "function " + std::to_string(e.src) +
                         " has no finish times yet");
  }
  Candidate best{std::numeric_limits<double>::infinity(), 0, 0.0};
  for (ServerId m = 0; m < net.server_count(); ++m) {
    const double t = transit.transit_time(m, fixed_dst, e.bits);
    const double phi = finish[m] + t + proc;
    if (phi < best.phi) best = {phi, m, t};
  }
  return best;
}

std::vector<double> ready_or_zero(std::span<const double> ready, std::size_t n) {
  if (ready.empty()) return std::vector<double>(n, 0.0);
  if (ready.size() != n) {
    throw EmbedError(ErrorCode::InvalidId,
                     "ready times must name every server");
  }
  return {ready.begin(), ready.end()};
}

EmbeddingResult materialize(const AugmentedDag& dag, const EdgeNetwork& net,
                            const TransitModel& transit,
                            std::vector<ServerId> placements,
                            std::vector<double> finish_times,
                            std::string algorithm) {
  EmbeddingResult r;
  r.algorithm = std::move(algorithm);
  r.edge_mappings.reserve(dag.edges().size());
  for (const StreamEdge& e : dag.edges()) {
    r.edge_mappings.push_back(
        transit.mapping(placements[e.src], placements[e.dst], e.bits));
  }
  r.start_times.resize(dag.function_count());
  for (FunctionId f = 0; f < dag.function_count(); ++f) {
    r.start_times[f] = finish_times[f] -
                       processing_time(dag.function(f), net.server(placements[f]));
  }
  r.makespan = finish_times[dag.dummy_id()];
  r.placements = std::move(placements);
  r.finish_times = std::move(finish_times);
  return r;
}

// Advances `v` to the next vector in lexicographic order over [0, n)^q.
bool next_placement(std::vector<ServerId>& v, std::size_t n) {
  for (std::size_t pos = v.size(); pos-- > 0;) {
    if (++v[pos] < n) return true;
    v[pos] = 0;
  }
  return false;
}

}  // namespace

double OptimalSplitTransit::transit_time(ServerId src, ServerId dst,
                                         double bits) const {
  if (src == dst) return 0.0;
  return optimal_bottleneck(catalog_.inverse_coefficient_sum(src, dst), bits);
}

SplitSolution OptimalSplitTransit::split(ServerId src, ServerId dst,
                                         double bits) const {
  auto coeffs = catalog_.coefficients(src, dst);
  return optimal_split(SplitProblem{{coeffs.begin(), coeffs.end()}, bits});
}

EdgeMapping OptimalSplitTransit::mapping(ServerId src, ServerId dst,
                                         double bits) const {
  if (src == dst) return EdgeMapping::local();
  auto paths = catalog_.paths(src, dst);
  EdgeMapping m;
  m.same_server = false;
  m.paths.assign(paths.begin(), paths.end());
  m.allocations = split(src, dst, bits).allocations;
  return m;
}

ScheduleState ScheduleState::create(const AugmentedDag& dag,
                                    const EdgeNetwork& net,
                                    std::span<const double> ready) {
  ScheduleState s;
  s.best_finish.assign(dag.function_count(),
                       std::vector<double>(net.server_count(), kUnset));
  s.decided_placement.assign(dag.function_count(), std::nullopt);
  s.server_ready = ready_or_zero(ready, net.server_count());
  return s;
}

bool ScheduleState::populated(FunctionId f) const {
  const auto& row = best_finish.at(f);
  return !row.empty() && !std::isnan(row.front());
}

void entry_finish_times(const AugmentedDag& dag, const EdgeNetwork& net,
                        ScheduleState& state, FunctionId f) {
  if (!dag.is_entry(f)) {
    throw EmbedError(ErrorCode::NotEntry,
                     "function " + std::to_string(f) + " has predecessors");
  }
  auto& row = state.best_finish.at(f);
  for (ServerId n = 0; n < net.server_count(); ++n) {
    row[n] = processing_time(dag.function(f), net.server(n)) +
             state.server_ready[n];
  }
}

SubproblemResult solve_subproblem(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const TransitModel& transit,
                                  const ScheduleState& state, EdgeIndex edge,
                                  ServerId fixed_dst) {
  const Candidate c = best_source(dag, net, transit, state, edge, fixed_dst);
  SubproblemResult r;
  r.phi = c.phi;
  r.src_server = c.src;
  r.transit = c.transit;
  EdgeMapping m = transit.mapping(c.src, fixed_dst, dag.edge(edge).bits);
  r.paths = std::move(m.paths);
  r.split.allocations = std::move(m.allocations);
  r.split.bottleneck_time = c.transit;
  return r;
}

SubproblemResult solve_subproblem(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const PathCatalog& catalog,
                                  const ScheduleState& state, EdgeIndex edge,
                                  ServerId fixed_dst) {
  return solve_subproblem(dag, net, OptimalSplitTransit(catalog), state, edge,
                          fixed_dst);
}

EmbeddingResult dp_embed(const AugmentedDag& dag, const EdgeNetwork& net,
                         const TransitModel& transit,
                         std::span<const double> ready, std::string algorithm) {
  const std::size_t n_servers = net.server_count();
  ScheduleState state = ScheduleState::create(dag, net, ready);

  // source[f][n][k]: chosen server of the k-th predecessor of f when f sits
  // on server n.
  std::vector<std::vector<std::vector<ServerId>>> source(dag.function_count());

  auto fill_row = [&](FunctionId f, ServerId n) {
    auto in = dag.in_edges(f);
    auto& chosen = source[f][n];
    chosen.resize(in.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < in.size(); ++k) {
      const Candidate c = best_source(dag, net, transit, state, in[k], n);
      chosen[k] = c.src;
      worst = std::max(worst, c.phi);
    }
    state.best_finish[f][n] = worst;
  };

  for (FunctionId f : dag.order()) {
    if (dag.is_entry(f)) {
      entry_finish_times(dag, net, state, f);
      continue;
    }
    source[f].resize(n_servers);
    for (ServerId n = 0; n < n_servers; ++n) fill_row(f, n);

    // Shared predecessors are committed when their first successor is
    // resolved: they take the source chosen for this function's best server,
    // and the row is recomputed so every entry reflects the commitment.
    ServerId best_n = 0;
    for (ServerId n = 1; n < n_servers; ++n) {
      if (state.best_finish[f][n] < state.best_finish[f][best_n]) best_n = n;
    }
    bool committed = false;
    auto in = dag.in_edges(f);
    for (std::size_t k = 0; k < in.size(); ++k) {
      const FunctionId pred = dag.edge(in[k]).src;
      if (state.decided_placement[pred] || dag.out_edges(pred).size() < 2) {
        continue;
      }
      state.decided_placement[pred] = source[f][best_n][k];
      committed = true;
    }
    if (committed) {
      for (ServerId n = 0; n < n_servers; ++n) fill_row(f, n);
    }
  }

  // Back-trace from the dummy's best server.
  const FunctionId dummy = dag.dummy_id();
  std::vector<std::optional<ServerId>> placed(dag.function_count());
  ServerId tail = 0;
  for (ServerId n = 1; n < n_servers; ++n) {
    if (state.best_finish[dummy][n] < state.best_finish[dummy][tail]) tail = n;
  }
  placed[dummy] = tail;
  auto order = dag.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const FunctionId f = *it;
    if (!placed[f]) {
      throw std::logic_error("function " + std::to_string(f) +
                             " unreachable in back-trace");
    }
    auto in = dag.in_edges(f);
    for (std::size_t k = 0; k < in.size(); ++k) {
      const FunctionId pred = dag.edge(in[k]).src;
      const ServerId m = state.decided_placement[pred]
                             ? *state.decided_placement[pred]
                             : source[f][*placed[f]][k];
      if (placed[pred] && *placed[pred] != m) {
        throw std::logic_error("conflicting placements for function " +
                               std::to_string(pred));
      }
      placed[pred] = m;
    }
  }

  std::vector<ServerId> placements(dag.function_count());
  std::vector<double> finish(dag.function_count());
  for (FunctionId f = 0; f < dag.function_count(); ++f) {
    placements[f] = *placed[f];
    finish[f] = state.best_finish[f][placements[f]];
  }
  return materialize(dag, net, transit, std::move(placements), std::move(finish),
                     std::move(algorithm));
}

EmbeddingResult dpe_embed(const AugmentedDag& dag, const EdgeNetwork& net,
                          const PathCatalog& catalog,
                          std::span<const double> ready) {
  return dp_embed(dag, net, OptimalSplitTransit(catalog), ready, "dpe");
}

EmbeddingResult brute_force_embed(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const TransitModel& transit,
                                  std::span<const double> ready) {
  const std::size_t n = net.server_count();
  const std::size_t q = dag.function_count();
  double combos = std::pow(static_cast<double>(n), static_cast<double>(q));
  if (combos > static_cast<double>(kBruteForceLimit)) {
    throw EmbedError(ErrorCode::TooLarge,
                     std::to_string(n) + "^" + std::to_string(q) +
                         " placements exceed the brute-force limit");
  }
  const std::vector<double> rt = ready_or_zero(ready, n);

  std::vector<ServerId> current(q, 0);
  std::vector<double> finish(q, 0.0);
  std::vector<ServerId> best_placement;
  std::vector<double> best_finish;
  double best = std::numeric_limits<double>::infinity();

  while (true) {
    for (FunctionId f : dag.order()) {
      const ServerId here = current[f];
      double start = 0.0;
      if (dag.is_entry(f)) {
        start = rt[here];
      } else {
        for (EdgeIndex e : dag.in_edges(f)) {
          const StreamEdge& edge = dag.edge(e);
          start = std::max(start, finish[edge.src] +
                                      transit.transit_time(current[edge.src],
                                                           here, edge.bits));
        }
      }
      finish[f] = start + processing_time(dag.function(f), net.server(here));
    }
    if (finish[dag.dummy_id()] < best) {
      best = finish[dag.dummy_id()];
      best_placement = current;
      best_finish = finish;
    }
    if (!next_placement(current, n)) break;
  }
  return materialize(dag, net, transit, std::move(best_placement),
                     std::move(best_finish), "brute");
}

EmbeddingResult brute_force_embed(const AugmentedDag& dag,
                                  const EdgeNetwork& net,
                                  const PathCatalog& catalog,
                                  std::span<const double> ready) {
  return brute_force_embed(dag, net, OptimalSplitTransit(catalog), ready);
}

}  // namespace edge_embed
