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

#include "edge_embed/workload.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edge_embed/error.hpp"
#include "edge_embed/rng.hpp"

namespace edge_embed {

namespace {

void check_range(const Range& r, const char* name) {
  if (!(std::isfinite(r.first) && std::isfinite(r.second) && r.first > 0.0 &&
        r.first <= r.second)) {
    throw EmbedError(ErrorCode::InvalidSpec,
                     std::string(name) + " must satisfy 0 < lo <= hi");
  }
}

bool connected(std::size_t n, const std::vector<std::pair<ServerId, ServerId>>& edges) {
  std::vector<std::vector<ServerId>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<ServerId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    ServerId x = stack.back();
    stack.pop_back();
    for (ServerId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

}  // namespace

void validate_spec(const WorkloadSpec& spec) {
  if (spec.n_servers == 0 || spec.n_dags == 0) {
    throw EmbedError(ErrorCode::InvalidSpec, "counts must be >= 1");
  }
  if (!(spec.connectivity > 0.0 && spec.connectivity <= 1.0)) {
    throw EmbedError(ErrorCode::InvalidSpec, "connectivity must be in (0, 1]");
  }
  if (spec.dag_size_range.first == 0 ||
      spec.dag_size_range.first > spec.dag_size_range.second) {
    throw EmbedError(ErrorCode::InvalidSpec,
                     "dag size range must satisfy 1 <= lo <= hi");
  }
  check_range(spec.psi_range, "psi range");
  check_range(spec.bandwidth_range, "bandwidth range");
  check_range(spec.flops_range, "flops range");
  check_range(spec.stream_range, "stream range");
}

EdgeNetwork generate_network(const WorkloadSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.n_servers;
  Rng topology = Rng::substream(spec.seed, Rng::Stream::Topology);
  Rng power = Rng::substream(spec.seed, Rng::Stream::ServerPower);
  Rng bandwidth = Rng::substream(spec.seed, Rng::Stream::LinkBandwidth);

  std::vector<std::pair<ServerId, ServerId>> pairs;
  bool ok = false;
  for (std::size_t attempt = 0; attempt < spec.max_connect_attempts; ++attempt) {
    pairs.clear();
    for (ServerId u = 0; u < n; ++u) {
      for (ServerId v = u + 1; v < n; ++v) {
        if (topology.bernoulli(spec.connectivity)) pairs.emplace_back(u, v);
      }
    }
    if (connected(n, pairs)) {
      ok = true;
      break;
    }
  }
  if (!ok) {
    throw EmbedError(ErrorCode::ConnectivityUnreachable,
                     "no connected graph after " +
                         std::to_string(spec.max_connect_attempts) +
                         " attempts; raise connectivity");
  }

  std::vector<Server> servers;
  for (ServerId s = 0; s < n; ++s) {
    servers.push_back({s, power.uniform(spec.psi_range.first, spec.psi_range.second)});
  }
  std::vector<Link> links;
  for (auto [u, v] : pairs) {
    links.push_back({links.size(), u, v,
                     bandwidth.uniform(spec.bandwidth_range.first,
                                       spec.bandwidth_range.second)});
  }
  return EdgeNetwork(std::move(servers), std::move(links));
}

EdgeNetwork grow_network(const EdgeNetwork& base, const WorkloadSpec& spec,
                         std::size_t total_servers, std::uint64_t seed) {
  validate_spec(spec);
  std::vector<Server> servers(base.servers().begin(), base.servers().end());
  std::vector<Link> links(base.links().begin(), base.links().end());
  Rng rng = Rng::substream(seed, Rng::Stream::Growth);
  for (ServerId s = servers.size(); s < total_servers; ++s) {
    servers.push_back({s, rng.uniform(spec.psi_range.first, spec.psi_range.second)});
    std::vector<ServerId> peers;
    for (ServerId u = 0; u < s; ++u) {
      if (rng.bernoulli(spec.connectivity)) peers.push_back(u);
    }
    if (peers.empty()) peers.push_back(rng.uniform_int(0, s - 1));
    for (ServerId u : peers) {
      links.push_back({links.size(), u, s,
                       rng.uniform(spec.bandwidth_range.first,
                                   spec.bandwidth_range.second)});
    }
  }
  return EdgeNetwork(std::move(servers), std::move(links));
}

EdgeNetwork scale_network(const EdgeNetwork& net, double psi_factor,
                          double bandwidth_factor) {
  std::vector<Server> servers(net.servers().begin(), net.servers().end());
  std::vector<Link> links(net.links().begin(), net.links().end());
  for (Server& s : servers) s.psi *= psi_factor;
  for (Link& l : links) l.throughput *= bandwidth_factor;
  return EdgeNetwork(std::move(servers), std::move(links));
}

std::vector<DagInstance> generate_dag_batch(const WorkloadSpec& spec) {
  validate_spec(spec);
  Rng shape = Rng::substream(spec.seed, Rng::Stream::DagShape);
  Rng weights = Rng::substream(spec.seed, Rng::Stream::DagWeights);

  std::vector<DagInstance> batch;
  batch.reserve(spec.n_dags);
  for (std::size_t d = 0; d < spec.n_dags; ++d) {
    const std::size_t q =
        shape.uniform_int(spec.dag_size_range.first, spec.dag_size_range.second);
    const std::size_t max_entries = std::max<std::size_t>(1, q / 3);
    const std::size_t entries = shape.uniform_int(1, max_entries);

    std::vector<FunctionNode> functions;
    for (FunctionId f = 0; f < q; ++f) {
      functions.push_back(
          {f, weights.uniform(spec.flops_range.first, spec.flops_range.second), false});
    }
    std::vector<StreamEdge> edges;
    std::size_t next_orphan = 1;  // entry 0 is adopted by function `entries`
    for (FunctionId f = entries; f < q; ++f) {
      std::vector<FunctionId> preds;
      if (f == entries) {
        preds.push_back(0);
      } else {
        preds.push_back(f - 1);
        if (next_orphan < entries) preds.push_back(next_orphan++);
      }
      const std::size_t want = std::max<std::size_t>(
          preds.size(), std::min<std::size_t>(shape.uniform_int(1, 3), f));
      while (preds.size() < want) {
        FunctionId cand = shape.uniform_int(0, f - 1);
        if (std::find(preds.begin(), preds.end(), cand) == preds.end()) {
          preds.push_back(cand);
        }
      }
      std::sort(preds.begin(), preds.end());
      for (FunctionId p : preds) {
        edges.push_back({p, f,
                         weights.uniform(spec.stream_range.first,
                                         spec.stream_range.second)});
      }
    }
    WorkloadDag dag(std::move(functions), std::move(edges));
    OutputSizes out;
    for (FunctionId f : dag.destinations()) {
      out[f] = weights.uniform(spec.stream_range.first, spec.stream_range.second);
    }
    batch.push_back({std::move(dag), std::move(out)});
  }
  return batch;
}

}  // namespace edge_embed
