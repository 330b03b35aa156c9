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

// Acceptance harness. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Tolerances and time limits are fixed
// below and are not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edge_embed/baselines.hpp"
#include "edge_embed/embedder.hpp"
#include "edge_embed/embedding.hpp"
#include "edge_embed/json_io.hpp"
#include "edge_embed/pathfind.hpp"
#include "edge_embed/report.hpp"
#include "edge_embed/rng.hpp"
#include "edge_embed/runner.hpp"
#include "edge_embed/splitter.hpp"
#include "edge_embed/workload.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace edge_embed;

namespace {

constexpr double kRel = 1e-9;
constexpr double kAbs = 1e-9;
constexpr std::uint64_t kSuiteSeed = 1;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Context {
  std::string cli;
  fs::path workdir;
  std::ofstream report;
};

std::string fmt(double x) { return format_double(x); }

// ---------------------------------------------------------------------------

Outcome split_optimality(Context&) {
  Rng rng(kSuiteSeed);
  std::size_t bad_oracle = 0, bad_sum = 0, bad_sign = 0, bad_equal = 0;
  double worst_rel = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    SplitProblem p;
    const std::size_t k = rng.uniform_int(1, 50);
    for (std::size_t i = 0; i < k; ++i) {
      p.coefficients.push_back(std::pow(10.0, rng.uniform(-9.0, 1.0)));
    }
    p.stream_size = std::pow(10.0, rng.uniform(0.0, 8.0));

    const SplitSolution s = optimal_split(p);
    const double tau = s.bottleneck_time;
    const double hi = p.stream_size *
                      *std::min_element(p.coefficients.begin(), p.coefficients.end());
    const double oracle = bisection_oracle(p, 1e-13 * hi);
    const double rel = std::abs(tau - oracle) / tau;
    worst_rel = std::max(worst_rel, rel);
    if (rel > kRel) ++bad_oracle;

    const double total = std::accumulate(s.allocations.begin(), s.allocations.end(), 0.0);
    if (std::abs(total - p.stream_size) > kRel * p.stream_size) ++bad_sum;
    double lo = INFINITY, top = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(s.allocations[i] > 0.0)) ++bad_sign;
      lo = std::min(lo, p.coefficients[i] * s.allocations[i]);
      top = std::max(top, p.coefficients[i] * s.allocations[i]);
    }
    if (top - lo > kRel * tau) ++bad_equal;
  }
  Outcome o;
  o.pass = bad_oracle + bad_sum + bad_sign + bad_equal == 0;
  o.detail = "1000 problems, oracle mismatches " + std::to_string(bad_oracle) +
             ", sum violations " + std::to_string(bad_sum) + ", non-positive z " +
             std::to_string(bad_sign) + ", unequal branches " + std::to_string(bad_equal) +
             ", worst relative gap " + fmt(worst_rel);
  return o;
}

Outcome path_counts(Context&) {
  const std::uint64_t expected[] = {1, 2, 5, 16, 65, 326};
  Outcome o;
  std::ostringstream d;
  for (std::size_t n = 2; n <= 7; ++n) {
    const EdgeNetwork net = testing::complete_graph(n);
    const PathCatalog catalog = build_catalog(net);
    const std::uint64_t budget = 6 * testing::factorial(n - 2);
    std::size_t count_ok = 0, calls_ok = 0, max_calls = 0;
    for (ServerId i = 0; i < n; ++i) {
      for (ServerId j = 0; j < n; ++j) {
        if (i == j) continue;
        if (catalog.paths(i, j).size() == expected[n - 2] &&
            catalog.paths(i, j).size() == testing::complete_graph_path_count(n)) {
          ++count_ok;
        }
        const std::size_t calls = catalog.recursion_calls(i, j);
        max_calls = std::max(max_calls, calls);
        if (calls <= budget) ++calls_ok;
      }
    }
    const std::size_t pairs = n * (n - 1);
    if (count_ok != pairs || calls_ok != pairs) o.pass = false;
    d << "K" << n << " " << catalog.paths(0, 1).size() << " paths, calls<=" << max_calls
      << "/" << budget << (n < 7 ? "; " : "");
  }
  o.detail = d.str();
  return o;
}

Outcome dp_vs_oracle(Context& ctx) {
  Rng rng(kSuiteSeed);
  auto instance = [&rng](bool tree) {
    const std::size_t n = rng.uniform_int(2, 4);
    EdgeNetwork net = testing::random_network(rng, n, 0.6);
    const std::size_t q = rng.uniform_int(1, 5);
    DagInstance inst =
        tree ? testing::random_in_tree(rng, q) : testing::random_general_dag(rng, q);
    std::vector<double> ready = testing::random_ready(rng, n);
    return std::tuple{std::move(net), std::move(inst), std::move(ready)};
  };

  std::size_t tree_equal = 0;
  for (int i = 0; i < 100; ++i) {
    auto [net, inst, ready] = instance(true);
    const AugmentedDag dag = inst.augmented();
    const PathCatalog catalog = build_catalog(net);
    const double d = dpe_embed(dag, net, catalog, ready).makespan;
    const double b = brute_force_embed(dag, net, catalog, ready).makespan;
    if (std::abs(d - b) <= kAbs * std::max(1.0, b)) ++tree_equal;
  }

  std::ofstream gaps(ctx.workdir / "dp_oracle_gaps.csv");
  gaps << "instance,functions,servers,dpe_makespan_s,oracle_makespan_s,gap_s\n";
  std::size_t bound_ok = 0, positive = 0;
  std::vector<double> all_gaps;
  for (int i = 0; i < 100; ++i) {
    auto [net, inst, ready] = instance(false);
    const AugmentedDag dag = inst.augmented();
    const PathCatalog catalog = build_catalog(net);
    const double d = dpe_embed(dag, net, catalog, ready).makespan;
    const double b = brute_force_embed(dag, net, catalog, ready).makespan;
    const double gap = d - b;
    if (gap >= -kAbs) ++bound_ok;
    if (gap > kAbs) ++positive;
    all_gaps.push_back(gap);
    gaps << i << "," << inst.dag.size() << "," << net.server_count() << "," << fmt(d) << ","
         << fmt(b) << "," << fmt(gap) << "\n";
  }
  std::sort(all_gaps.begin(), all_gaps.end());
  const double mean = std::accumulate(all_gaps.begin(), all_gaps.end(), 0.0) / 100.0;
  ctx.report << "criterion 3 gap distribution (general DAGs, seconds): min "
             << fmt(all_gaps.front()) << " median " << fmt(all_gaps[50]) << " p90 "
             << fmt(all_gaps[90]) << " max " << fmt(all_gaps.back()) << " mean " << fmt(mean)
             << "; " << positive << "/100 strictly above the oracle\n";

  Outcome o;
  o.pass = tree_equal == 100 && bound_ok == 100;
  o.detail = "out-degree<=1: " + std::to_string(tree_equal) + "/100 equal; general: " +
             std::to_string(bound_ok) + "/100 >= oracle, " + std::to_string(positive) +
             " with a positive gap (max " + fmt(all_gaps.back()) + " s)";
  return o;
}

WorkloadSpec suite_spec() {
  WorkloadSpec spec;
  spec.seed = kSuiteSeed;
  spec.n_servers = 6;
  spec.connectivity = 0.5;
  spec.n_dags = 200;
  return spec;
}

std::vector<double> makespans(const ReportBundle& r, std::string_view algo) {
  std::vector<double> out;
  for (const TrialRecord& t : r.trials) {
    if (t.algorithm == algo) out.push_back(t.makespan);
  }
  return out;
}

const AlgorithmSummary& summary_of(const ReportBundle& r, std::string_view algo) {
  for (const AlgorithmSummary& s : r.algorithms) {
    if (s.algorithm == algo) return s;
  }
  throw std::runtime_error("algorithm missing from report");
}

Outcome dominance(Context& ctx) {
  const WorkloadSpec spec = suite_spec();
  const ReportBundle r = run_benchmark(spec, BenchOptions{});
  emit_report(r, ctx.workdir / "suite_report");
  const auto dpe = makespans(r, "dpe");
  const auto heft = makespans(r, "heft");
  const auto po = makespans(r, "placement-only");

  std::size_t le_heft = 0, le_po = 0;
  for (std::size_t i = 0; i < dpe.size(); ++i) {
    if (dpe[i] <= heft[i] + kAbs) ++le_heft;
    if (dpe[i] <= po[i] + kAbs) ++le_po;
  }
  std::vector<double> thresholds = dpe;
  thresholds.insert(thresholds.end(), heft.begin(), heft.end());
  thresholds.insert(thresholds.end(), po.begin(), po.end());
  std::size_t cdf_bad = 0;
  const auto& cd = summary_of(r, "dpe").cdf;
  for (const char* other : {"heft", "placement-only"}) {
    const auto& co = summary_of(r, other).cdf;
    for (double t : thresholds) {
      if (cdf_fraction_at(cd, t) < cdf_fraction_at(co, t)) ++cdf_bad;
    }
  }
  ctx.report << "criterion 4 means (s): dpe " << fmt(summary_of(r, "dpe").mean_makespan)
             << " heft " << fmt(summary_of(r, "heft").mean_makespan) << " placement-only "
             << fmt(summary_of(r, "placement-only").mean_makespan) << "\n";
  for (const Reduction& red : r.reductions) {
    ctx.report << "criterion 4 reduction " << red.algorithm << " vs " << red.baseline << ": "
               << fmt(red.fraction) << "\n";
  }

  Outcome o;
  o.pass = le_heft == dpe.size() && le_po == dpe.size() && cdf_bad == 0 && dpe.size() == 200;
  o.detail = std::to_string(le_heft) + "/" + std::to_string(dpe.size()) + " <= HEFT, " +
             std::to_string(le_po) + "/" + std::to_string(dpe.size()) +
             " <= placement-only, CDF violations " + std::to_string(cdf_bad);
  return o;
}

std::vector<double> dpe_makespans(const EdgeNetwork& net, std::span<const DagInstance> dags) {
  BenchOptions options;
  options.algorithms = {Algorithm::Dpe};
  return makespans(run_benchmark(net, dags, options), "dpe");
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

Outcome scalability(Context& ctx) {
  // Nested family: a 4-server network from the suite seed, grown to 6, then to 8.
  WorkloadSpec spec = suite_spec();
  spec.n_servers = 4;
  const EdgeNetwork n4 = generate_network(spec);
  const EdgeNetwork n6 = grow_network(n4, spec, 6, spec.seed);
  const EdgeNetwork n8 = grow_network(n6, spec, 8, spec.seed + 1);
  const auto dags = generate_dag_batch(suite_spec());

  const auto m4 = dpe_makespans(n4, dags);
  const auto m6 = dpe_makespans(n6, dags);
  const auto m8 = dpe_makespans(n8, dags);
  std::size_t monotone = 0;
  for (std::size_t i = 0; i < dags.size(); ++i) {
    if (m6[i] <= m4[i] + kAbs && m8[i] <= m6[i] + kAbs) ++monotone;
  }
  auto fastest = [](const EdgeNetwork& net) {
    double best = 0.0;
    for (const Server& s : net.servers()) best = std::max(best, s.psi);
    return best;
  };
  ctx.report << "criterion 5 mean DPE makespan (s): 4 servers " << fmt(mean(m4)) << ", 6 "
             << fmt(mean(m6)) << ", 8 " << fmt(mean(m8)) << "; fastest psi "
             << fmt(fastest(n4)) << ", " << fmt(fastest(n6)) << ", " << fmt(fastest(n8))
             << "\n";

  Outcome o;
  const bool strict = mean(m8) < mean(m4);
  o.pass = monotone == dags.size() && strict;
  o.detail = std::to_string(monotone) + "/" + std::to_string(dags.size()) +
             " non-increasing; mean 4->6->8: " + fmt(mean(m4)) + " -> " + fmt(mean(m6)) +
             " -> " + fmt(mean(m8)) + (strict ? " (strict decrease)" : " (no strict decrease)");
  return o;
}

Outcome sensitivity(Context& ctx) {
  const WorkloadSpec spec = suite_spec();
  const EdgeNetwork base = generate_network(spec);
  const auto dags = generate_dag_batch(spec);
  const ReportBundle r0 = run_benchmark(base, dags, BenchOptions{});
  const ReportBundle rp = run_benchmark(scale_network(base, 2.0, 1.0), dags, BenchOptions{});
  const ReportBundle rb = run_benchmark(scale_network(base, 1.0, 2.0), dags, BenchOptions{});

  Outcome o;
  std::ostringstream d;
  bool first = true;
  for (const char* algo : {"dpe", "heft", "placement-only"}) {
    const auto m0 = makespans(r0, algo);
    const auto mp = makespans(rp, algo);
    const auto mb = makespans(rb, algo);
    std::size_t ok_p = 0, ok_b = 0;
    for (std::size_t i = 0; i < m0.size(); ++i) {
      if (mp[i] <= m0[i] + kAbs) ++ok_p;
      if (mb[i] <= m0[i] + kAbs) {
        ++ok_b;
      } else {
        ctx.report << "criterion 6 " << algo << " dag " << i << " b x2: " << fmt(m0[i])
                   << " -> " << fmt(mb[i]) << "\n";
      }
    }
    for (std::size_t i = 0; i < m0.size(); ++i) {
      if (mp[i] > m0[i] + kAbs) {
        ctx.report << "criterion 6 " << algo << " dag " << i << " psi x2: " << fmt(m0[i])
                   << " -> " << fmt(mp[i]) << "\n";
      }
    }
    if (ok_p != m0.size() || ok_b != m0.size()) o.pass = false;
    d << (first ? "" : "; ") << algo << " psi " << ok_p << "/" << m0.size() << " b " << ok_b
      << "/" << m0.size();
    first = false;
  }
  o.detail = d.str();
  return o;
}

Outcome worked_example(Context&) {
  // Servers 0..4 at psi = 1. Stream f0 -> f1 is split 2/3 bits over 0-1-3
  // (1/1 + 1/2 s/bit) and 0-2-3 (1/2 + 1/3 s/bit); f1 -> f2 uses 3-4 at b = 2.
  const EdgeNetwork net({{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}, {4, 1.0}},
                        {{0, 0, 1, 1.0}, {1, 1, 3, 2.0}, {2, 0, 2, 2.0}, {3, 2, 3, 3.0},
                         {4, 3, 4, 2.0}});
  const WorkloadDag base({{0, 1.0}, {1, 1.0}, {2, 1.0}}, {{0, 1, 5.0}, {1, 2, 3.0}});
  const AugmentedDag dag = augment_dummy_tail(base, {{2, 1.0}});
  const std::vector<ServerId> placements{0, 3, 4, 4};
  const std::vector<EdgeMapping> mappings{
      {false, {{{0, 1, 3}, {0, 1}}, {{0, 2, 3}, {2, 3}}}, {2.0, 3.0}},
      {false, {{{3, 4}, {4}}}, {3.0}},
      EdgeMapping::local()};
  const ReplayResult r = replay_embedding(dag, net, placements, mappings);
  Outcome o;
  o.pass = r.makespan == 7.5;
  o.detail = "makespan " + fmt(r.makespan) + " s, branch times " +
             fmt(path_coefficient(mappings[0].paths[0], net) * 2.0) + " and " +
             fmt(path_coefficient(mappings[0].paths[1], net) * 3.0);
  return o;
}

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

bool run(const std::string& command) { return std::system(command.c_str()) == 0; }

Outcome determinism(Context& ctx) {
  const fs::path dir = ctx.workdir / "determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  Outcome o;
  if (ctx.cli.empty()) {
    // No CLI binary available: exercise the same library path twice.
    WorkloadSpec spec = suite_spec();
    emit_report(run_benchmark(spec, BenchOptions{}), dir / "run1");
    emit_report(run_benchmark(spec, BenchOptions{}), dir / "run2");
    o.detail = "library path; ";
  } else {
    const std::string cli = quote(ctx.cli);
    const bool ok =
        run(cli + " gen --seed 1 --servers 6 --connectivity 0.5 --dags 200 --out " +
            quote(dir / "input") + " > /dev/null") &&
        run(cli + " bench --network " + quote(dir / "input/net.json") + " --dags " +
            quote(dir / "input/dags.json") + " --algos dpe,heft,placement-only --seed 1 --out " +
            quote(dir / "run1") + " > /dev/null") &&
        run(cli + " bench --network " + quote(dir / "input/net.json") + " --dags " +
            quote(dir / "input/dags.json") + " --algos dpe,heft,placement-only --seed 1 --out " +
            quote(dir / "run2") + " > /dev/null");
    if (!ok) {
      o.pass = false;
      o.detail = "CLI invocation failed";
      return o;
    }
    o.detail = "CLI bench x2; ";
  }
  for (const char* name : {"trials.csv", "summary.json"}) {
    const std::string a = read_text_file(dir / "run1" / name);
    const std::string b = read_text_file(dir / "run2" / name);
    const bool same = !a.empty() && a == b;
    if (!same) o.pass = false;
    o.detail += std::string(name) + (same ? " identical (" : " DIFFERS (") +
                std::to_string(a.size()) + " bytes) ";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge_embed acceptance suite"};
  Context ctx;
  std::string workdir = "acceptance_out";
  app.add_option("--cli", ctx.cli, "Path to the edge_embed CLI");
  app.add_option("--workdir", workdir, "Directory for reports");
  CLI11_PARSE(app, argc, argv);
  ctx.workdir = workdir;
  fs::create_directories(ctx.workdir);
  ctx.report.open(ctx.workdir / "acceptance_report.txt");

  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no limit
    std::function<Outcome(Context&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "split optimality", 5.0, split_optimality},
      {2, "path enumeration counts", 10.0, path_counts},
      {3, "DP optimality vs oracle", 60.0, dp_vs_oracle},
      {4, "dominance over HEFT and placement-only", 120.0, dominance},
      {5, "scalability trend", 0.0, scalability},
      {6, "sensitivity direction", 0.0, sensitivity},
      {7, "worked-example regression", 0.0, worked_example},
      {8, "determinism", 0.0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0.0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += " [over time limit " + fmt(c.limit_s) + " s]";
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
         << "): " << o.detail << " [" << std::fixed << std::setprecision(2) << secs << " s]";
    std::cout << line.str() << std::endl;
    ctx.report << line.str() << "\n";
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
