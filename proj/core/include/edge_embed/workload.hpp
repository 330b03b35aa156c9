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
#include <cstdint>
#include <utility>
#include <vector>

#include "edge_embed/model.hpp"

namespace edge_embed {

/// A workload DAG plus the output sizes its destination functions send to
/// the dummy tail.
struct DagInstance {
  WorkloadDag dag;
  OutputSizes dst_out;

  AugmentedDag augmented() const { return augment_dummy_tail(dag, dst_out); }
};

using Range = std::pair<double, double>;

/// Parameters for synthetic networks and DAG batches. Defaults are the
/// desk-scale suite: 6 servers at edge probability 0.5, 200 DAGs of 2 to 20
/// functions, server power 20-40 Gflop/s, link throughput 30-80 Mbit/s,
/// 1-10 Gflop per function and 5-15 Mbit per stream.
struct WorkloadSpec {
  std::uint64_t seed = 1;
  std::size_t n_servers = 6;
  double connectivity = 0.5;
  Range psi_range{2.0e10, 4.0e10};
  Range bandwidth_range{3.0e7, 8.0e7};
  std::size_t n_dags = 200;
  std::pair<std::size_t, std::size_t> dag_size_range{2, 20};
  Range flops_range{1.0e9, 1.0e10};
  Range stream_range{5.0e6, 1.5e7};
  std::size_t max_connect_attempts = 1000;
};

/// Throws InvalidSpec for empty or inverted ranges, non-positive values,
/// zero counts or a connectivity outside (0, 1].
void validate_spec(const WorkloadSpec& spec);

/// Erdos-Renyi graph over n_servers at the given edge probability,
/// re-sampled until connected. Links are numbered in (u, v) lexicographic
/// order. Throws ConnectivityUnreachable once the attempt budget is spent.
EdgeNetwork generate_network(const WorkloadSpec& spec);

/// Adds servers to `base` until it has `total_servers`. Each new server
/// links to every existing server with probability `spec.connectivity` (at
/// least one link is forced). Existing servers and links keep their ids, so
/// the result is a supergraph of `base`.
EdgeNetwork grow_network(const EdgeNetwork& base, const WorkloadSpec& spec,
                         std::size_t total_servers, std::uint64_t seed);

/// Same topology with every psi multiplied by `psi_factor` and every link
/// throughput by `bandwidth_factor`.
EdgeNetwork scale_network(const EdgeNetwork& net, double psi_factor,
                          double bandwidth_factor);

/// Layered random DAGs. The first e functions (1 <= e <= max(1, Q/3)) are
/// entries; every later function has 1-3 predecessors at earlier positions,
/// always including its immediate predecessor in the order when that is not
/// an entry, and each entry is adopted by some non-entry, so every DAG is a
/// single weak component.
std::vector<DagInstance> generate_dag_batch(const WorkloadSpec& spec);

}  // namespace edge_embed
