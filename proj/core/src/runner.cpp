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

#include "edge_embed/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>

#include "edge_embed/error.hpp"
#include "edge_embed/json_io.hpp"

namespace edge_embed {

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Dpe: return "dpe";
    case Algorithm::Heft: return "heft";
    case Algorithm::PlacementOnly: return "placement-only";
    case Algorithm::Brute: return "brute";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Dpe, Algorithm::Heft, Algorithm::PlacementOnly,
                      Algorithm::Brute}) {
    if (algorithm_name(a) == name) return a;
  }
  throw EmbedError(ErrorCode::InvalidSpec,
                   "unknown algorithm \"" + std::string(name) + "\"");
}

std::vector<Algorithm> parse_algorithm_list(std::string_view csv) {
  std::vector<Algorithm> out;
  std::size_t begin = 0;
  while (begin <= csv.size()) {
    std::size_t end = csv.find(',', begin);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view token = csv.substr(begin, end - begin);
    if (!token.empty()) {
      Algorithm a = parse_algorithm(token);
      if (std::find(out.begin(), out.end(), a) != out.end()) {
        throw EmbedError(ErrorCode::InvalidSpec,
                         "algorithm listed twice: " + std::string(token));
      }
      out.push_back(a);
    }
    begin = end + 1;
  }
  if (out.empty()) {
    throw EmbedError(ErrorCode::InvalidSpec, "no algorithms selected");
  }
  return out;
}

NetworkContext::NetworkContext(EdgeNetwork net, std::size_t path_cap)
    : net_(std::move(net)),
      catalog_(build_catalog(net_, path_cap)),
      routes_(passive_routes(catalog_)) {}

EmbeddingResult NetworkContext::embed(Algorithm algo, const AugmentedDag& dag,
                                      std::span<const double> ready) const {
  switch (algo) {
    case Algorithm::Dpe: return dpe_embed(dag, net_, catalog_, ready);
    case Algorithm::Heft: return heft_schedule(dag, net_, routes_, ready);
    case Algorithm::PlacementOnly:
      return placement_only_embed(dag, net_, catalog_, routes_, ready);
    case Algorithm::Brute: return brute_force_embed(dag, net_, catalog_, ready);
  }
  throw EmbedError(ErrorCode::InvalidSpec, "unknown algorithm");
}

std::string network_fingerprint(const EdgeNetwork& net) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : network_to_json(net)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ReportBundle summarize(std::vector<TrialRecord> trials,
                       std::span<const std::string> algorithms,
                       std::size_t batch_size) {
  if (batch_size == 0) {
    throw EmbedError(ErrorCode::InvalidSpec, "batch size must be >= 1");
  }
  ReportBundle b;
  b.batch_size = batch_size;
  std::map<std::string, std::vector<const TrialRecord*>> by_algo;
  for (const TrialRecord& t : trials) by_algo[t.algorithm].push_back(&t);

  for (const std::string& name : algorithms) {
    AlgorithmSummary s;
    s.algorithm = name;
    auto& rows = by_algo[name];
    std::sort(rows.begin(), rows.end(), [](const TrialRecord* a, const TrialRecord* c) {
      return a->dag_id < c->dag_id;
    });
    double total = 0.0;
    std::vector<double> makespans;
    for (const TrialRecord* t : rows) {
      total += t->makespan;
      s.runtime_total += t->runtime;
      makespans.push_back(t->makespan);
    }
    if (!rows.empty()) s.mean_makespan = total / static_cast<double>(rows.size());
    for (std::size_t start = 0; start < rows.size(); start += batch_size) {
      const std::size_t end = std::min(rows.size(), start + batch_size);
      double sum = 0.0;
      for (std::size_t i = start; i < end; ++i) sum += rows[i]->makespan;
      s.batch_means.push_back(sum / static_cast<double>(end - start));
    }
    std::sort(makespans.begin(), makespans.end());
    for (std::size_t i = 0; i < makespans.size(); ++i) {
      s.cdf.push_back({makespans[i], static_cast<double>(i + 1) /
                                         static_cast<double>(makespans.size())});
    }
    b.algorithms.push_back(std::move(s));
  }
  for (const AlgorithmSummary& a : b.algorithms) {
    for (const AlgorithmSummary& base : b.algorithms) {
      if (&a == &base || base.mean_makespan <= 0.0) continue;
      b.reductions.push_back(
          {a.algorithm, base.algorithm,
           (base.mean_makespan - a.mean_makespan) / base.mean_makespan});
    }
  }
  b.trials = std::move(trials);
  return b;
}

ReportBundle run_benchmark(const EdgeNetwork& net,
                           std::span<const DagInstance> dags,
                           const BenchOptions& options) {
  if (options.algorithms.empty()) {
    throw EmbedError(ErrorCode::InvalidSpec, "no algorithms selected");
  }
  using Clock = std::chrono::steady_clock;
  const NetworkContext ctx(net, options.path_cap);
  const std::string fingerprint = network_fingerprint(net);

  std::vector<TrialRecord> trials;
  trials.reserve(dags.size() * options.algorithms.size());
  for (std::size_t d = 0; d < dags.size(); ++d) {
    const AugmentedDag dag = dags[d].augmented();
    for (Algorithm algo : options.algorithms) {
      const auto t0 = Clock::now();
      const EmbeddingResult r = ctx.embed(algo, dag);
      const auto t1 = Clock::now();
      TrialRecord rec;
      rec.dag_id = d;
      rec.algorithm = std::string(algorithm_name(algo));
      rec.makespan = r.makespan;
      rec.runtime = options.record_timing
                        ? std::chrono::duration<double>(t1 - t0).count()
                        : 0.0;
      rec.dag_size = dags[d].dag.size();
      rec.network_fingerprint = fingerprint;
      trials.push_back(std::move(rec));
    }
  }

  std::vector<std::string> names;
  for (Algorithm a : options.algorithms) names.emplace_back(algorithm_name(a));
  ReportBundle b = summarize(std::move(trials), names, options.batch_size);
  b.network_fingerprint = fingerprint;
  b.server_count = net.server_count();
  b.link_count = net.link_count();
  b.catalog_paths = ctx.catalog().total_paths();
  b.dag_count = dags.size();
  b.timing_recorded = options.record_timing;
  b.seed = options.seed;
  return b;
}

ReportBundle run_benchmark(const WorkloadSpec& spec, const BenchOptions& options) {
  const EdgeNetwork net = generate_network(spec);
  const std::vector<DagInstance> dags = generate_dag_batch(spec);
  BenchOptions opts = options;
  opts.seed = spec.seed;
  return run_benchmark(net, dags, opts);
}

double cdf_fraction_at(std::span<const CdfPoint> cdf, double threshold) {
  double fraction = 0.0;
  for (const CdfPoint& p : cdf) {
    if (p.makespan <= threshold) fraction = p.fraction;
  }
  return fraction;
}

}  // namespace edge_embed
