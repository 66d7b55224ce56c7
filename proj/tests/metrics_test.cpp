// Copyright 2026 The socnetgen Authors.
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


#include "socnetgen/metrics.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "socnetgen/generator.hpp"

namespace socnetgen {
namespace {

Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (std::size_t k = 0; k < m; ++k) g.add_edge(static_cast<NodeId>(rng.below(n)), static_cast<NodeId>(rng.below(n)));
  return g;
}

TEST(Metrics, TriangleWithPendant) {
  // Triangle 0-1-2 plus pendant 3 on node 0.
  const Graph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  EXPECT_NEAR(avg_local_clustering(g), (1.0 / 3 + 1 + 1 + 0) / 4, 1e-15);
  EXPECT_NEAR(global_transitivity(g), 0.6, 1e-15);
  EXPECT_NEAR(*density(g), 4.0 / 6, 1e-15);
  EXPECT_EQ(triangles_per_node(g), (std::vector<std::uint64_t>{1, 1, 1, 0}));
}

TEST(Metrics, PathGeodesic) {
  const Graph g = from_edges(3, {{0, 1}, {1, 2}});
  const auto r = mean_geodesic(g);
  EXPECT_NEAR(*r.mean, 4.0 / 3, 1e-15);
  EXPECT_EQ(r.method, GeodesicMethod::exact);
  EXPECT_EQ(r.component_size, 3u);
}

TEST(Metrics, GeodesicUsesLargestComponent) {
  const Graph g = from_edges(6, {{0, 1}, {2, 3}, {3, 4}});
  EXPECT_NEAR(*mean_geodesic(g).mean, 4.0 / 3, 1e-15);
  EXPECT_EQ(largest_component(g), (std::vector<NodeId>{2, 3, 4}));
  EXPECT_FALSE(mean_geodesic(Graph(4)).mean);
}

TEST(Metrics, Assortativity) {
  const Graph star = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_NEAR(*degree_assortativity(star), -1.0, 1e-12);
  const Graph cycle = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_FALSE(degree_assortativity(cycle));
  EXPECT_FALSE(degree_assortativity(Graph(3)));
}

TEST(Metrics, Degenerate) {
  EXPECT_FALSE(density(Graph(1)));
  EXPECT_EQ(avg_local_clustering(Graph()), 0.0);
  EXPECT_EQ(global_transitivity(Graph(3)), 0.0);
}

TEST(Metrics, MatchBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 5 + seed % 20;
    const Graph g = random_graph(n, n + seed % 30, seed);
    const auto a = oracle::adjacency(g);
    ASSERT_NEAR(*density(g), *oracle::density(a), 1e-12);
    ASSERT_NEAR(avg_local_clustering(g), oracle::avg_local_clustering(a), 1e-12);
    ASSERT_NEAR(global_transitivity(g), oracle::global_transitivity(a), 1e-12);
    const auto geo = mean_geodesic(g).mean;
    const auto geo_ref = oracle::mean_geodesic(a);
    ASSERT_EQ(geo.has_value(), geo_ref.has_value());
    if (geo) {
      ASSERT_NEAR(*geo, *geo_ref, 1e-12) << seed;
    }
    const auto r = degree_assortativity(g);
    const auto r_ref = oracle::assortativity(a);
    ASSERT_EQ(r.has_value(), r_ref.has_value());
    if (r) {
      ASSERT_NEAR(*r, *r_ref, 1e-9);
    }
  }
}

TEST(Metrics, BitParallelBfsAcrossBatches) {
  // More than 64 sources exercises several batches.
  const Graph g = random_graph(150, 400, 12);
  const auto a = oracle::adjacency(g);
  EXPECT_NEAR(*mean_geodesic(g).mean, *oracle::mean_geodesic(a), 1e-12);
}

TEST(Metrics, SampledGeodesic) {
  const auto sim = simulate(fixtures::student_schema(), GenParams{400, 1, 8, 1, 1, 2, 5});
  const auto exact = mean_geodesic(sim.graph);
  GeodesicOptions all;
  all.mode = GeodesicOptions::Mode::sampled;
  all.samples = 400;
  const auto full = mean_geodesic(sim.graph, all);
  EXPECT_EQ(full.method, GeodesicMethod::sampled);
  EXPECT_NEAR(*full.mean, *exact.mean, 1e-12);
  GeodesicOptions some = all;
  some.samples = 100;
  some.seed = 9;
  const auto part = mean_geodesic(sim.graph, some);
  EXPECT_EQ(part.sources, 100u);
  EXPECT_EQ(part.seed, 9u);
  EXPECT_NEAR(*part.mean, *exact.mean, 0.05 * *exact.mean);
  EXPECT_EQ(*mean_geodesic(sim.graph, some).mean, *part.mean);
}

TEST(Metrics, AutomaticModeSwitchesAtThreshold) {
  const Graph g = random_graph(100, 300, 4);
  GeodesicOptions o;
  o.exact_threshold = 10;
  o.samples = 20;
  EXPECT_EQ(mean_geodesic(g, o).method, GeodesicMethod::sampled);
  o.exact_threshold = 1000;
  EXPECT_EQ(mean_geodesic(g, o).method, GeodesicMethod::exact);
}

TEST(Metrics, DegreeHistogram) {
  const Graph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  using P = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(degree_histogram(g), (std::vector<P>{{1, 1}, {2, 2}, {3, 1}}));
}

TEST(Metrics, AnalyzeReportsPowerLawProblems) {
  const Graph g = from_edges(4, {{0, 1}, {1, 2}});
  const auto r = analyze(g);
  EXPECT_FALSE(r.powerlaw);
  EXPECT_FALSE(r.powerlaw_error.empty());
  const auto sim = simulate(fixtures::student_schema(), GenParams{500, 1, 20, 1, 1, 3, 2});
  const auto big = analyze(sim.graph);
  ASSERT_TRUE(big.powerlaw);
  EXPECT_EQ(big.node_count, 500u);
  EXPECT_EQ(big.edge_count, sim.graph.edge_count());
}

}  // namespace
}  // namespace socnetgen
