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

#ifndef SOCNETGEN_GRAPH_HPP_
#define SOCNETGEN_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace socnetgen {

/// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph with dense integer ids.
///
/// Each adjacency list is kept sorted, so membership is O(log deg) and
/// iteration order is deterministic. Nodes and edges can only be added.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  NodeId add_node() {
    adjacency_.emplace_back();
    return static_cast<NodeId>(adjacency_.size() - 1);
  }

  /// Inserts {i, j}. Returns false, leaving the graph unchanged, for a
  /// self-loop or an edge that already exists.
  bool add_edge(NodeId i, NodeId j) {
    check(i);
    check(j);
    if (i == j) return false;
    auto& ai = adjacency_[i];
    auto pos = std::lower_bound(ai.begin(), ai.end(), j);
    if (pos != ai.end() && *pos == j) return false;
    ai.insert(pos, j);
    auto& aj = adjacency_[j];
    aj.insert(std::lower_bound(aj.begin(), aj.end(), i), i);
    ++edge_count_;
    max_degree_ = std::max({max_degree_, ai.size(), aj.size()});
    return true;
  }

  bool has_edge(NodeId i, NodeId j) const {
    check(i);
    check(j);
    if (adjacency_[i].size() > adjacency_[j].size()) std::swap(i, j);
    return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
  }

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::size_t degree(NodeId i) const {
    check(i);
    return adjacency_[i].size();
  }

  /// Neighbors of `i` in ascending id order.
  std::span<const NodeId> neighbors(NodeId i) const {
    check(i);
    return adjacency_[i];
  }

  /// Largest degree in the graph. Throws std::logic_error on an empty graph.
  std::size_t max_degree() const {
    if (adjacency_.empty()) throw std::logic_error("max_degree of an empty graph");
    return max_degree_;
  }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
      for (NodeId v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(adjacency_.size());
    for (std::size_t i = 0; i < adjacency_.size(); ++i) out[i] = adjacency_[i].size();
    return out;
  }

  void reserve(std::size_t node_count) { adjacency_.reserve(node_count); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(NodeId i) const {
    if (i >= adjacency_.size()) {
      throw std::out_of_range("node id " + std::to_string(i) + " out of range (node_count " +
                              std::to_string(adjacency_.size()) + ")");
    }
  }

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

/// |adj(i) ∩ adj(j)| by merging the two sorted lists.
inline std::size_t common_neighbor_count(const Graph& g, NodeId i, NodeId j) {
  const auto a = g.neighbors(i);
  const auto b = g.neighbors(j);
  std::size_t count = 0;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      ++count;
      ++x;
      ++y;
    }
  }
  return count;
}

/// Full adjacency scan: symmetry, no self-loops, no duplicates, and an edge
/// count consistent with the degree sum. Used by tests and after ingestion.
inline bool is_simple_and_consistent(const Graph& g) {
  std::size_t degree_sum = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto adj = g.neighbors(i);
    degree_sum += adj.size();
    for (std::size_t k = 0; k < adj.size(); ++k) {
      if (adj[k] == i) return false;
      if (k > 0 && adj[k - 1] >= adj[k]) return false;
      if (adj[k] >= g.node_count()) return false;
      const auto back = g.neighbors(adj[k]);
      if (!std::binary_search(back.begin(), back.end(), i)) return false;
    }
  }
  return degree_sum == 2 * g.edge_count();
}

/// Connected components labelled 0..k-1 in order of their smallest node id.
inline std::vector<std::size_t> component_labels(const Graph& g, std::size_t* component_count = nullptr) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.node_count(), unset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (label[v] == unset) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (component_count != nullptr) *component_count = next;
  return label;
}

inline bool is_connected(const Graph& g) {
  std::size_t count = 0;
  component_labels(g, &count);
  return count <= 1;
}

}  // namespace socnetgen

#endif  // SOCNETGEN_GRAPH_HPP_
