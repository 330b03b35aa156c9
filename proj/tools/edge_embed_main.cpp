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

// Command-line front end: path listing, single split solves, single-DAG
// embedding, workload generation and the benchmark harness.
//
// Exit codes: 0 success, 2 invalid input, 3 path explosion, 1 anything else.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edge_embed/baselines.hpp"
#include "edge_embed/embedder.hpp"
#include "edge_embed/error.hpp"
#include "edge_embed/json_io.hpp"
#include "edge_embed/pathfind.hpp"
#include "edge_embed/report.hpp"
#include "edge_embed/runner.hpp"
#include "edge_embed/splitter.hpp"
#include "edge_embed/workload.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace edge_embed;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitPathExplosion = 3;

struct PathsArgs {
  std::string network;
  ServerId src = 0;
  ServerId dst = 0;
};

struct SplitArgs {
  std::vector<double> coeffs;
  double size = 0.0;
  bool verify = false;
};

struct EmbedArgs {
  std::string network;
  std::string dag;
  std::string algo = "dpe";
  std::string ready;
};

struct GenArgs {
  std::uint64_t seed = 1;
  std::size_t servers = 6;
  double connectivity = 0.5;
  std::size_t dags = 200;
  std::size_t min_size = 2;
  std::size_t max_size = 20;
  std::string out;
};

struct BenchArgs {
  std::string network;
  std::string dags;
  std::string algos = "dpe,heft,placement-only";
  std::string out;
  std::uint64_t seed = 0;
  std::size_t batch_size = 50;
  bool timing = false;
};

int run_paths(const PathsArgs& a) {
  const EdgeNetwork net = load_network(a.network);
  EnumerationStats stats;
  const auto paths =
      enumerate_simple_paths(net, a.src, a.dst, &stats, path_cap_from_env());
  for (const SimplePath& p : paths) {
    std::string line;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
      if (i) line += '-';
      line += std::to_string(p.nodes[i]);
    }
    std::cout << line << " coeff=" << format_double(path_coefficient(p, net))
              << "\n";
  }
  std::cout << "count=" << paths.size()
            << " recursion_calls=" << stats.recursion_calls << "\n";
  return 0;
}

int run_split(const SplitArgs& a) {
  const SplitProblem problem{a.coeffs, a.size};
  const SplitSolution s = optimal_split(problem);
  if (!a.verify) {
    std::cout << split_to_json(s);
    return 0;
  }
  const double tol = 1e-12 * s.bottleneck_time;
  const double oracle = bisection_oracle(problem, tol);
  const bool agrees =
      std::abs(oracle - s.bottleneck_time) <= 1e-9 * s.bottleneck_time;
  nlohmann::ordered_json doc;
  doc["tau"] = s.bottleneck_time;
  doc["z"] = s.allocations;
  doc["oracle_tau"] = oracle;
  doc["agrees"] = agrees;
  std::cout << doc.dump() << "\n";
  return agrees ? 0 : 1;
}

int run_embed(const EmbedArgs& a) {
  const NetworkContext ctx(load_network(a.network), path_cap_from_env());
  const DagInstance inst = parse_dag(read_text_file(a.dag));
  const AugmentedDag dag = inst.augmented();
  std::vector<double> ready;
  if (!a.ready.empty()) ready = parse_ready(read_text_file(a.ready));
  const EmbeddingResult r = ctx.embed(parse_algorithm(a.algo), dag, ready);
  std::cout << embedding_to_json(r, dag);
  return 0;
}

int run_gen(const GenArgs& a) {
  WorkloadSpec spec;
  spec.seed = a.seed;
  spec.n_servers = a.servers;
  spec.connectivity = a.connectivity;
  spec.n_dags = a.dags;
  spec.dag_size_range = {a.min_size, a.max_size};
  const EdgeNetwork net = generate_network(spec);
  const auto dags = generate_dag_batch(spec);
  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) throw EmbedError(ErrorCode::Io, "cannot create " + a.out);
  write_text_file(fs::path(a.out) / "net.json", network_to_json(net));
  write_text_file(fs::path(a.out) / "dags.json", dags_to_json(dags));
  std::cout << "wrote " << net.server_count() << " servers, "
            << net.link_count() << " links, " << dags.size() << " DAGs to "
            << a.out << "\n";
  return 0;
}

int run_bench(const BenchArgs& a) {
  BenchOptions opts;
  opts.algorithms = parse_algorithm_list(a.algos);
  opts.batch_size = a.batch_size;
  opts.record_timing = a.timing;
  opts.path_cap = path_cap_from_env();
  opts.seed = a.seed;
  const EdgeNetwork net = load_network(a.network);
  const auto dags = import_dags(a.dags);
  const ReportBundle bundle = run_benchmark(net, dags, opts);
  emit_report(bundle, a.out);
  for (const AlgorithmSummary& s : bundle.algorithms) {
    std::cout << s.algorithm << " mean_makespan_s="
              << format_double(s.mean_makespan) << "\n";
  }
  for (const Reduction& r : bundle.reductions) {
    std::cout << r.algorithm << " vs " << r.baseline
              << " reduction=" << format_double(r.fraction) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint function placement and multipath stream mapping for DAG "
               "workloads on edge networks"};
  app.require_subcommand(1);

  PathsArgs paths;
  auto* paths_cmd = app.add_subcommand("paths", "List simple paths between two servers");
  paths_cmd->add_option("--network", paths.network, "Network JSON")->required();
  paths_cmd->add_option("--src", paths.src, "Source server")->required();
  paths_cmd->add_option("--dst", paths.dst, "Destination server")->required();

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Optimal split of one stream");
  split_cmd->add_option("--coeffs", split.coeffs, "Path coefficients (s/bit)")
      ->required()
      ->delimiter(',');
  split_cmd->add_option("--size", split.size, "Stream size (bits)")->required();
  split_cmd->add_flag("--verify", split.verify,
                      "Cross-check against the bisection oracle");

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Embed one DAG");
  embed_cmd->add_option("--network", embed.network, "Network JSON")->required();
  embed_cmd->add_option("--dag", embed.dag, "DAG JSON")->required();
  embed_cmd->add_option("--algo", embed.algo, "dpe|heft|placement-only|brute")
      ->check(CLI::IsMember({"dpe", "heft", "placement-only", "brute"}));
  embed_cmd->add_option("--ready", embed.ready, "Per-server ready times JSON");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a network and DAG batch");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--servers", gen.servers, "Number of servers");
  gen_cmd->add_option("--connectivity", gen.connectivity, "Edge probability");
  gen_cmd->add_option("--dags", gen.dags, "Number of DAGs");
  gen_cmd->add_option("--min-size", gen.min_size, "Smallest DAG size");
  gen_cmd->add_option("--max-size", gen.max_size, "Largest DAG size");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark harness");
  bench_cmd->add_option("--network", bench.network, "Network JSON")->required();
  bench_cmd->add_option("--dags", bench.dags, "DAG batch JSON")->required();
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms");
  bench_cmd->add_option("--out", bench.out, "Report directory")->required();
  bench_cmd->add_option("--seed", bench.seed, "Seed recorded in the report");
  bench_cmd->add_option("--batch-size", bench.batch_size, "DAGs per batch mean");
  bench_cmd->add_flag("--timing", bench.timing,
                      "Record wall-clock runtimes (reports become run-dependent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*paths_cmd) return run_paths(paths);
    if (*split_cmd) return run_split(split);
    if (*embed_cmd) return run_embed(embed);
    if (*gen_cmd) return run_gen(gen);
    if (*bench_cmd) return run_bench(bench);
  } catch (const EmbedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::PathExplosion) return kExitPathExplosion;
    return e.is_validation_error() ? kExitValidation : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
