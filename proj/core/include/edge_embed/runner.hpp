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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edge_embed/baselines.hpp"
#include "edge_embed/embedder.hpp"
#include "edge_embed/model.hpp"
#include "edge_embed/pathfind.hpp"
#include "edge_embed/workload.hpp"

namespace edge_embed {

enum class Algorithm { Dpe, Heft, PlacementOnly, Brute };

std::string_view algorithm_name(Algorithm a) noexcept;
/// Accepts dpe, heft, placement-only, brute. Throws InvalidSpec otherwise.
Algorithm parse_algorithm(std::string_view name);
/// Comma-separated list; duplicates are rejected.
std::vector<Algorithm> parse_algorithm_list(std::string_view csv);

/// Everything one algorithm needs for one network, built once and shared.
class NetworkContext {
 public:
  explicit NetworkContext(EdgeNetwork net,
                          std::size_t path_cap = PathCatalog::kDefaultPathCap);

  const EdgeNetwork& network() const noexcept { return net_; }
  const PathCatalog& catalog() const noexcept { return catalog_; }
  const PassiveRoutes& routes() const noexcept { return routes_; }

  EmbeddingResult embed(Algorithm algo, const AugmentedDag& dag,
                        std::span<const double> ready = {}) const;

 private:
  EdgeNetwork net_;
  PathCatalog catalog_;
  PassiveRoutes routes_;
};

struct TrialRecord {
  std::size_t dag_id = 0;
  std::string algorithm;
  double makespan = 0.0;
  double runtime = 0.0;  // seconds; 0 unless timing is recorded
  std::size_t dag_size = 0;
  std::string network_fingerprint;
};

struct CdfPoint {
  double makespan = 0.0;
  double fraction = 0.0;
};

struct AlgorithmSummary {
  std::string algorithm;
  double mean_makespan = 0.0;
  std::vector<double> batch_means;
  std::vector<CdfPoint> cdf;
  double runtime_total = 0.0;
};

/// reduction = (mean(baseline) - mean(algorithm)) / mean(baseline).
struct Reduction {
  std::string algorithm;
  std::string baseline;
  double fraction = 0.0;
};

struct ReportBundle {
  std::string network_fingerprint;
  std::size_t server_count = 0;
  std::size_t link_count = 0;
  std::size_t catalog_paths = 0;
  std::size_t dag_count = 0;
  std::size_t batch_size = 0;
  bool timing_recorded = false;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;  // ordered by (dag_id, algorithm order)
  std::vector<AlgorithmSummary> algorithms;
  std::vector<Reduction> reductions;
};

struct BenchOptions {
  std::vector<Algorithm> algorithms{Algorithm::Dpe, Algorithm::Heft,
                                    Algorithm::PlacementOnly};
  std::size_t batch_size = 50;
  /// Wall-clock runtimes make reports non-reproducible, so they are opt-in.
  bool record_timing = false;
  std::size_t path_cap = PathCatalog::kDefaultPathCap;
  std::uint64_t seed = 0;  // recorded in the report only
};

/// FNV-1a over the canonical network JSON, as 16 hex digits.
std::string network_fingerprint(const EdgeNetwork& net);

/// Embeds every DAG with every selected algorithm on an idle cluster.
/// Throws InvalidSpec for an empty algorithm list and PathExplosion when
/// the catalog exceeds the cap.
ReportBundle run_benchmark(const EdgeNetwork& net,
                           std::span<const DagInstance> dags,
                           const BenchOptions& options);

/// Generates the network and DAG batch from `spec`, then runs them.
ReportBundle run_benchmark(const WorkloadSpec& spec, const BenchOptions& options);

/// Aggregates trial records into per-algorithm means, batch means, CDFs and
/// pairwise reductions. `algorithms` fixes the output order.
ReportBundle summarize(std::vector<TrialRecord> trials,
                       std::span<const std::string> algorithms,
                       std::size_t batch_size);

/// Fraction of CDF samples with makespan <= threshold.
double cdf_fraction_at(std::span<const CdfPoint> cdf, double threshold);

}  // namespace edge_embed
