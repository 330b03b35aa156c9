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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "edge_embed/error.hpp"
#include "edge_embed/pathfind.hpp"
#include "edge_embed/rng.hpp"
#include "test_support.hpp"

namespace edge_embed {
namespace {

using testing::brute_force_paths;
using testing::complete_graph;
using testing::complete_graph_path_count;

std::vector<std::vector<ServerId>> node_sequences(const std::vector<SimplePath>& ps) {
  std::vector<std::vector<ServerId>> out;
  for (const auto& p : ps) out.push_back(p.nodes);
  return out;
}

TEST(EnumerateSimplePaths, SingleLink) {
  EdgeNetwork net({{0, 1.0}, {1, 1.0}}, {{0, 0, 1, 1.0}});
  auto paths = enumerate_simple_paths(net, 0, 1);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].nodes, (std::vector<ServerId>{0, 1}));
  EXPECT_EQ(paths[0].links, (std::vector<LinkId>{0}));
}

TEST(EnumerateSimplePaths, TriangleCanonicalOrder) {
  auto paths = enumerate_simple_paths(complete_graph(3), 0, 2);
  EXPECT_EQ(node_sequences(paths),
            (std::vector<std::vector<ServerId>>{{0, 2}, {0, 1, 2}}));
}

TEST(EnumerateSimplePaths, K4HasFivePathsPerPair) {
  const EdgeNetwork net = complete_graph(4);
  for (ServerId i = 0; i < 4; ++i) {
    for (ServerId j = 0; j < 4; ++j) {
      if (i == j) continue;
      EXPECT_EQ(enumerate_simple_paths(net, i, j).size(), 5u);
    }
  }
}

TEST(EnumerateSimplePaths, SamePairRejected) {
  try {
    enumerate_simple_paths(complete_graph(3), 1, 1);
    FAIL();
  } catch (const EmbedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SamePair);
  }
}

TEST(EnumerateSimplePaths, CapStopsEnumeration) {
  try {
    enumerate_simple_paths(complete_graph(6), 0, 1, nullptr, 10);
    FAIL();
  } catch (const EmbedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PathExplosion);
  }
}

TEST(PathCoefficient, Examples) {
  EdgeNetwork net({{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}},
                  {{0, 0, 1, 2.0}, {1, 1, 2, 4.0}, {2, 2, 3, 10.0}});
  EXPECT_DOUBLE_EQ(path_coefficient({{0, 1, 2}, {0, 1}}, net), 0.75);
  EXPECT_DOUBLE_EQ(path_coefficient({{2, 3}, {2}}, net), 0.1);
  EXPECT_DOUBLE_EQ(path_coefficient({{0, 1, 2, 3}, {0, 1, 2}},
                                    complete_graph(4)),
                   3.0);
}

// Counts on K_N match both the closed formula and an independent
// permutation enumerator; recursion calls stay within 6 (N-2)!.
TEST(EnumerateSimplePaths, CompleteGraphCountsAndRecursionBudget) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const EdgeNetwork net = complete_graph(n);
    EnumerationStats stats;
    auto paths = enumerate_simple_paths(net, 0, n - 1, &stats);
    EXPECT_EQ(paths.size(), complete_graph_path_count(n)) << "N=" << n;
    EXPECT_EQ(paths.size(), brute_force_paths(net, 0, n - 1).size()) << "N=" << n;
    EXPECT_LE(stats.recursion_calls, 6 * testing::factorial(n - 2)) << "N=" << n;
  }
  EXPECT_EQ(complete_graph_path_count(5), 16u);
  EXPECT_EQ(complete_graph_path_count(10), 109601u);
}

TEST(EnumerateSimplePaths, MatchesBruteForceOnRandomGraphs) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.uniform_int(2, 7);
    const EdgeNetwork net = testing::random_network(rng, n, rng.uniform(0.1, 0.9));
    const ServerId a = rng.uniform_int(0, n - 1);
    ServerId b = rng.uniform_int(0, n - 1);
    if (a == b) b = (a + 1) % n;
    auto paths = enumerate_simple_paths(net, a, b);
    auto expected = brute_force_paths(net, a, b);
    auto got = node_sequences(paths);
    EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end(), canonical_less));
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
    for (const SimplePath& p : paths) {
      std::set<ServerId> unique(p.nodes.begin(), p.nodes.end());
      EXPECT_EQ(unique.size(), p.nodes.size());
      ASSERT_EQ(p.links.size() + 1, p.nodes.size());
      for (std::size_t h = 0; h < p.links.size(); ++h) {
        EXPECT_EQ(net.link_between(p.nodes[h], p.nodes[h + 1]),
                  std::optional<LinkId>(p.links[h]));
      }
    }
  }
}

TEST(BuildCatalog, K5SixteenPathsPerPair) {
  PathCatalog catalog = build_catalog(complete_graph(5));
  for (ServerId i = 0; i < 5; ++i) {
    for (ServerId j = 0; j < 5; ++j) {
      if (i == j) {
        EXPECT_TRUE(catalog.paths(i, j).empty());
        EXPECT_EQ(catalog.inverse_coefficient_sum(i, j), 0.0);
      } else {
        EXPECT_EQ(catalog.paths(i, j).size(), 16u);
        EXPECT_GT(catalog.recursion_calls(i, j), 0u);
      }
    }
  }
  EXPECT_EQ(catalog.total_paths(), 20u * 16u);
}

TEST(BuildCatalog, StarLeafToLeafSinglePath) {
  EdgeNetwork star({{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}},
                   {{0, 0, 1, 1.0}, {1, 0, 2, 2.0}, {2, 0, 3, 4.0}});
  PathCatalog catalog = build_catalog(star);
  ASSERT_EQ(catalog.paths(1, 3).size(), 1u);
  EXPECT_EQ(catalog.paths(1, 3)[0].nodes, (std::vector<ServerId>{1, 0, 3}));
  EXPECT_DOUBLE_EQ(catalog.coefficients(1, 3)[0], 1.0 + 0.25);
}

TEST(BuildCatalog, K10ExceedsSmallCap) {
  try {
    build_catalog(complete_graph(10), 1000);
    FAIL();
  } catch (const EmbedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PathExplosion);
  }
}

TEST(BuildCatalog, CoefficientsAndReversalSymmetry) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.uniform_int(2, 6);
    const EdgeNetwork net = testing::random_network(rng, n, 0.5);
    const PathCatalog catalog = build_catalog(net);
    for (ServerId i = 0; i < n; ++i) {
      for (ServerId j = 0; j < n; ++j) {
        if (i == j) continue;
        auto fwd = catalog.paths(i, j);
        auto coeffs = catalog.coefficients(i, j);
        double inv = 0.0;
        for (std::size_t k = 0; k < fwd.size(); ++k) {
          double sum = 0.0;
          for (LinkId l : fwd[k].links) sum += 1.0 / net.link(l).throughput;
          EXPECT_EQ(coeffs[k], sum);
          inv += 1.0 / coeffs[k];
        }
        EXPECT_DOUBLE_EQ(catalog.inverse_coefficient_sum(i, j), inv);
        std::set<std::vector<ServerId>> reversed;
        for (const SimplePath& p : fwd) {
          reversed.insert({p.nodes.rbegin(), p.nodes.rend()});
        }
        std::set<std::vector<ServerId>> back;
        for (const SimplePath& p : catalog.paths(j, i)) back.insert(p.nodes);
        EXPECT_EQ(reversed, back);
      }
    }
  }
}

TEST(PathCapFromEnv, ParsesOverride) {
  ::setenv("EDGE_EMBED_PATH_CAP", "1234", 1);
  EXPECT_EQ(path_cap_from_env(), 1234u);
  ::setenv("EDGE_EMBED_PATH_CAP", "junk", 1);
  EXPECT_EQ(path_cap_from_env(), PathCatalog::kDefaultPathCap);
  ::unsetenv("EDGE_EMBED_PATH_CAP");
  EXPECT_EQ(path_cap_from_env(), PathCatalog::kDefaultPathCap);
}

}  // namespace
}  // namespace edge_embed
