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


#include "socnetgen/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

namespace socnetgen {
namespace {

Graph path(std::size_t n) {
  Graph g(n);
  for (NodeId v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

TEST(Graph, AddEdgeRejectsSelfLoopsAndDuplicates) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_FALSE(g.add_edge(2, 2));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(Graph, BadIdsThrow) {
  Graph g(2);
  EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
  EXPECT_THROW(g.degree(5), std::out_of_range);
  EXPECT_THROW(g.neighbors(2), std::out_of_range);
}

TEST(Graph, NeighborsAreSorted) {
  Graph g(5);
  g.add_edge(0, 4);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 1);
  const auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(nb.size(), 4u);
}

TEST(Graph, CommonNeighbors) {
  // N(0) = {1,2,3}, N(5) = {2,3,4}.
  Graph g(6);
  for (NodeId v : {1, 2, 3}) g.add_edge(0, v);
  for (NodeId v : {2, 3, 4}) g.add_edge(5, v);
  EXPECT_EQ(common_neighbor_count(g, 0, 5), 2u);
  EXPECT_EQ(common_neighbor_count(g, 1, 4), 0u);
}

TEST(Graph, MaxDegreeTracksInsertionsAndRejectsEmpty) {
  Graph empty;
  EXPECT_THROW(empty.max_degree(), std::logic_error);
  Graph g(4);
  EXPECT_EQ(g.max_degree(), 0u);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  EXPECT_EQ(g.max_degree(), 2u);
  g.add_node();
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(Graph, EdgesCanonicalAndDegreeSum) {
  Graph g = path(5);
  g.add_edge(4, 0);
  const auto edges = g.edges();
  ASSERT_EQ(edges.size(), g.edge_count());
  std::size_t degree_sum = 0;
  for (auto d : g.degrees()) degree_sum += d;
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
  for (const auto& [u, v] : edges) EXPECT_LT(u, v);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  EXPECT_TRUE(is_simple_and_consistent(g));
}

TEST(Graph, Components) {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  std::size_t count = 0;
  const auto label = component_labels(g, &count);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(label[2], label[4]);
  EXPECT_NE(label[0], label[2]);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(path(7)));
}

TEST(Graph, Equality) {
  EXPECT_EQ(path(4), path(4));
  EXPECT_FALSE(path(4) == path(5));
}

}  // namespace
}  // namespace socnetgen
