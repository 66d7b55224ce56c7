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

// Structural metrics used to compare a generated network with a reference:
// density, clustering (average local and global transitivity), mean
// geodesic distance, degree assortativity, and a power-law degree fit.

#ifndef SOCNETGEN_METRICS_HPP_
#define SOCNETGEN_METRICS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socnetgen/graph.hpp"
#include "socnetgen/powerlaw.hpp"
#include "socnetgen/random.hpp"

namespace socnetgen {

/// 2E / (N (N - 1)); nullopt for fewer than two nodes.
inline std::optional<double> density(const Graph& g) {
  const double n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) return std::nullopt;
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

/// Number of triangles through each node.
///
/// Edges are oriented from lower to higher (degree, id) rank, so each
/// triangle is found exactly once by intersecting out-lists.
inline std::vector<std::uint64_t> triangles_per_node(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto before = [&](NodeId a, NodeId b) {
    const auto da = g.degree(a);
    const auto db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<std::vector<NodeId>> out(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (before(u, v)) out[u].push_back(v);
    }
  }
  std::vector<std::uint64_t> count(n, 0);
  std::vector<char> mark(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : out[u]) mark[v] = 1;
    for (NodeId v : out[u]) {
      for (NodeId w : out[v]) {
        if (mark[w]) {
          ++count[u];
          ++count[v];
          ++count[w];
        }
      }
    }
    for (NodeId v : out[u]) mark[v] = 0;
  }
  return count;
}

/// Mean local clustering; nodes of degree < 2 contribute 0. 0 for an empty graph.
inline double avg_local_clustering(const Graph& g) {
  if (g.empty()) return 0.0;
  const auto tri = triangles_per_node(g);
  double sum = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2) sum += static_cast<double>(tri[v]) / (d * (d - 1.0) / 2.0);
  }
  return sum / static_cast<double>(g.node_count());
}

/// 3 * triangles / connected triples; 0 without triples.
inline double global_transitivity(const Graph& g) {
  const auto tri = triangles_per_node(g);
  std::uint64_t closed = 0;
  std::uint64_t triples = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    closed += tri[v];
    triples += d * (d - 1) / 2;
  }
  return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

/// Pearson correlation of endpoint degrees over both orientations of every
/// edge. nullopt without edges or when all endpoint degrees are equal.
inline std::optional<double> degree_assortativity(const Graph& g) {
  if (g.edge_count() == 0) return std::nullopt;
  // Exact integer moments; variance is zero exactly when den == 0.
  using wide = __int128;
  wide sum_product = 0;
  wide sum = 0;
  wide sum_squares = 0;
  for (const auto& [u, v] : g.edges()) {
    const wide a = static_cast<wide>(g.degree(u));
    const wide b = static_cast<wide>(g.degree(v));
    sum_product += a * b;
    sum += a + b;
    sum_squares += a * a + b * b;
  }
  const wide m = static_cast<wide>(g.edge_count());
  const wide num = 4 * m * sum_product - sum * sum;
  const wide den = 2 * m * sum_squares - sum * sum;
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

enum class GeodesicMethod { exact, sampled };

inline std::string_view to_string(GeodesicMethod m) { return m == GeodesicMethod::exact ? "exact" : "sampled"; }

struct GeodesicOptions {
  enum class Mode { automatic, exact, sampled };
  Mode mode = Mode::automatic;
  std::size_t samples = 1000;           ///< sources in sampled mode
  std::uint64_t seed = kDefaultSeed;     ///< source selection in sampled mode
  std::size_t exact_threshold = 20000;  ///< automatic: exact below this component size
};

struct GeodesicResult {
  std::optional<double> mean;
  GeodesicMethod method = GeodesicMethod::exact;
  std::size_t sources = 0;
  std::size_t component_size = 0;
  std::uint64_t seed = 0;  ///< meaningful for sampled mode only
};

/// Nodes of the largest connected component (ties: the one holding the
/// smallest id), ascending.
inline std::vector<NodeId> largest_component(const Graph& g) {
  std::size_t count = 0;
  const auto label = component_labels(g, &count);
  if (count == 0) return {};
  std::vector<std::size_t> size(count, 0);
  for (auto l : label) ++size[l];
  const auto best = static_cast<std::size_t>(std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<NodeId> out;
  out.reserve(size[best]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (label[v] == best) out.push_back(v);
  }
  return out;
}

namespace detail {

/// Sum of BFS distances from each source to every node it reaches.
/// Sources run 64 at a time as bits of one word per node.
inline std::uint64_t distance_sum(const Graph& g, std::span<const NodeId> sources) {
  const std::size_t n = g.node_count();
  std::vector<std::uint64_t> visited(n, 0), frontier(n, 0), next(n, 0);
  std::vector<NodeId> active, upcoming;
  std::uint64_t total = 0;
  for (std::size_t base = 0; base < sources.size(); base += 64) {
    const std::size_t batch = std::min<std::size_t>(64, sources.size() - base);
    std::fill(visited.begin(), visited.end(), 0);
    active.clear();
    for (std::size_t b = 0; b < batch; ++b) {
      const NodeId s = sources[base + b];
      if (frontier[s] == 0) active.push_back(s);
      frontier[s] |= std::uint64_t{1} << b;
      visited[s] |= std::uint64_t{1} << b;
    }
    std::uint64_t level = 0;
    while (!active.empty()) {
      ++level;
      upcoming.clear();
      for (NodeId u : active) {
        const std::uint64_t f = frontier[u];
        for (NodeId w : g.neighbors(u)) {
          const std::uint64_t bits = f & ~visited[w];
          if (bits == 0) continue;
          if (next[w] == 0) upcoming.push_back(w);
          next[w] |= bits;
        }
      }
      for (NodeId u : active) frontier[u] = 0;
      for (NodeId w : upcoming) {
        visited[w] |= next[w];
        total += static_cast<std::uint64_t>(std::popcount(next[w])) * level;
        frontier[w] = next[w];
        next[w] = 0;
      }
      std::swap(active, upcoming);
    }
    for (NodeId u : active) frontier[u] = 0;
  }
  return total;
}

}  // namespace detail

/// Mean shortest-path length over reachable ordered pairs inside the largest
/// component. nullopt for an edgeless graph.
inline GeodesicResult mean_geodesic(const Graph& g, const GeodesicOptions& options = {}) {
  GeodesicResult result;
  if (g.edge_count() == 0) return result;
  const auto component = largest_component(g);
  const std::size_t c = component.size();
  result.component_size = c;

  bool exact = options.mode == GeodesicOptions::Mode::exact;
  if (options.mode == GeodesicOptions::Mode::automatic) exact = c < options.exact_threshold;

  std::vector<NodeId> sources;
  if (exact) {
    result.method = GeodesicMethod::exact;
    sources = component;
  } else {
    result.method = GeodesicMethod::sampled;
    result.seed = options.seed;
    // Partial Fisher-Yates: the first k entries become a uniform sample.
    sources = component;
    const std::size_t k = std::min(std::max<std::size_t>(options.samples, 1), c);
    Rng rng(options.seed);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(c - i));
      std::swap(sources[i], sources[j]);
    }
    sources.resize(k);
  }
  result.sources = sources.size();
  const std::uint64_t total = detail::distance_sum(g, sources);
  result.mean = static_cast<double>(total) /
                (static_cast<double>(sources.size()) * static_cast<double>(c - 1));
  return result;
}

/// (degree, count) for every degree that occurs, ascending.
inline std::vector<std::pair<std::size_t, std::size_t>> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> counts;
  for (NodeId v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];
  return {counts.begin(), counts.end()};
}

struct MetricsReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::optional<double> density;
  double avg_local_clustering = 0.0;
  double global_transitivity = 0.0;
  GeodesicResult geodesic;
  std::optional<PowerLawFit> powerlaw;
  std::string powerlaw_error;  ///< why powerlaw is missing, if it is
  std::optional<double> assortativity;
};

struct AnalysisOptions {
  GeodesicOptions geodesic;
  PowerLawEstimator estimator = PowerLawEstimator::exact;
};

inline MetricsReport analyze(const Graph& g, const AnalysisOptions& options = {}) {
  MetricsReport r;
  r.node_count = g.node_count();
  r.edge_count = g.edge_count();
  r.density = density(g);
  r.avg_local_clustering = avg_local_clustering(g);
  r.global_transitivity = global_transitivity(g);
  r.geodesic = mean_geodesic(g, options.geodesic);
  r.assortativity = degree_assortativity(g);
  std::vector<std::uint64_t> degrees;
  degrees.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) degrees.push_back(g.degree(v));
  try {
    r.powerlaw = powerlaw_fit(degrees, options.estimator);
  } catch (const InsufficientDataError& e) {
    r.powerlaw_error = e.what();
  }
  return r;
}

}  // namespace socnetgen

#endif  // SOCNETGEN_METRICS_HPP_
