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

// Growth model combining demographic homophily with triadic closure and
// preferential attachment.
//
// Construction starts from a triangle on nodes 0, 1, 2. Every later node v
// arrives in id order, draws a target degree m uniformly from
// [m_min, m_max] (capped at the number of existing nodes), and repeats
// until it has m links:
//
//   (a) with probability p_sim, link to an existing node sampled in
//       proportion to its combined similarity score with v; otherwise link
//       to a uniformly random existing node;
//   (b) with probability p_triad, link to up to triad_count neighbors of
//       the node chosen in (a), highest score first; if that node has no
//       eligible neighbors, link to uniformly random nodes instead.
//
// Random stream order (one Rng, consumed strictly in this order):
//   per arriving node v = 3 .. n-1:
//     1. target degree m: Rng::between(m_min, m_max)
//     2. per iteration while deg(v) < m:
//        a. branch: one uniform, similarity branch when < p_sim
//        b. selection: similarity branch with positive total score, one
//           uniform for the roulette wheel; otherwise one Rng::below(E),
//           E = number of eligible nodes
//        c. only if deg(v) < m after (a): one uniform for the triad branch,
//           triad branch when < p_triad; random fallback picks then draw one
//           Rng::below(E) each
// When profiles are sampled as well, sample_profiles runs first on the same
// Rng (see cli), so one seed fixes the whole run.

#ifndef SOCNETGEN_GENERATOR_HPP_
#define SOCNETGEN_GENERATOR_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socnetgen/diagnostics.hpp"
#include "socnetgen/graph.hpp"
#include "socnetgen/random.hpp"
#include "socnetgen/schema.hpp"
#include "socnetgen/similarity.hpp"

namespace socnetgen {

/// Which nodes' neighborhoods feed the triad step.
enum class AnchorMode {
  current,  ///< the node chosen by the immediately preceding similarity step
  all,      ///< every node linked so far during this arrival
};

struct GenParams {
  std::size_t n = 0;            ///< node count
  std::size_t m_min = 1;        ///< lower bound of the per-arrival target degree
  std::size_t m_max = 1;        ///< upper bound of the per-arrival target degree
  double p_sim = 1.0;           ///< probability of similarity-guided selection
  double p_triad = 1.0;         ///< probability of a triad step per iteration
  std::size_t triad_count = 0;  ///< links per triad step
  std::uint64_t seed = kDefaultSeed;
  AnchorMode anchor = AnchorMode::current;

  friend bool operator==(const GenParams&, const GenParams&) = default;
};

inline void validate(const GenParams& p) {
  if (p.n < 3) throw ConfigError("n must be >= 3 (the seed triad needs three nodes), got " + std::to_string(p.n));
  if (p.m_min < 1) throw ConfigError("m_min must be >= 1");
  if (p.m_min > p.m_max) throw ConfigError("m_min must be <= m_max");
  if (p.m_max >= p.n) throw ConfigError("m_max must be < n");
  if (!(p.p_sim >= 0.0 && p.p_sim <= 1.0)) throw ConfigError("p_sim must lie in [0, 1]");
  if (!(p.p_triad >= 0.0 && p.p_triad <= 1.0)) throw ConfigError("p_triad must lie in [0, 1]");
}

/// What happened while one node arrived. Edge counters sum to the node's
/// degree at the end of its arrival.
struct NodeTrace {
  std::size_t target_degree = 0;
  std::size_t similarity_edges = 0;      ///< roulette-wheel picks in step (a)
  std::size_t random_edges = 0;          ///< uniform picks in step (a)
  std::size_t zero_score_fallbacks = 0;  ///< subset of random_edges: similarity branch, all scores zero
  std::size_t triad_edges = 0;           ///< ranked neighbor picks in step (b)
  std::size_t triad_random_edges = 0;    ///< step (b) random picks, anchor had no eligible neighbors
  bool exhausted = false;                ///< ran out of eligible nodes before reaching the target

  std::size_t edges() const {
    return similarity_edges + random_edges + triad_edges + triad_random_edges;
  }
};

struct GenTrace {
  std::size_t seed_edges = 0;
  std::vector<NodeTrace> nodes;

  template <typename Field>
  std::size_t total(Field field) const {
    std::size_t sum = 0;
    for (const auto& t : nodes) sum += t.*field;
    return sum;
  }
  std::size_t total_edges() const {
    std::size_t sum = seed_edges;
    for (const auto& t : nodes) sum += t.edges();
    return sum;
  }
};

/// Uniform integer in [m_min, m_max], capped at the number of existing nodes.
inline std::size_t draw_target_degree(const GenParams& params, std::size_t existing_nodes, Rng& rng) {
  const auto m = static_cast<std::size_t>(rng.between(params.m_min, params.m_max));
  return std::min(m, existing_nodes);
}

/// Incremental state for attaching nodes one at a time.
///
/// The newest node of the graph is the arriving node; every node with a
/// smaller id is an existing node. Scores against existing nodes are
/// evaluated in O(1) each from cached demographic scores and common-neighbor
/// counts that connect() keeps up to date.
class Construction {
 public:
  Construction(const AttributeSchema& schema, std::span<const NodeProfile> profiles, const GenParams& params,
               Graph initial = Graph())
      : schema_(schema), profiles_(profiles), params_(params), demographic_(schema), graph_(std::move(initial)) {
    for (NodeId i = 0; i < graph_.node_count(); ++i) {
      if (i >= profiles_.size()) throw ConfigError("fewer profiles than graph nodes");
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  Graph take_graph() && { return std::move(graph_); }

  /// The arriving node, or nullopt before the first arrive().
  std::optional<NodeId> current() const { return current_; }

  /// Adds the next node and makes it the arriving node.
  NodeId arrive() {
    if (graph_.node_count() >= profiles_.size()) throw ConfigError("no profile left for a new node");
    const NodeId v = graph_.add_node();
    begin(v);
    return v;
  }

  /// Makes the last node of the graph the arriving node, keeping any links it
  /// already has. Lets tests pose a step on a hand-built graph.
  NodeId adopt_last() {
    if (graph_.empty()) throw std::logic_error("adopt_last on an empty graph");
    const NodeId v = static_cast<NodeId>(graph_.node_count() - 1);
    begin(v);
    for (NodeId u : graph_.neighbors(v)) note_link(u);
    return v;
  }

  /// Existing nodes the arriving node is not yet linked to.
  std::size_t eligible_count() const { return *current_ - graph_.degree(*current_); }

  bool is_eligible(NodeId c) const { return c < *current_ && !linked_[c]; }

  /// Links the arriving node to `target`. Returns false if already linked.
  bool connect(NodeId target) {
    if (!graph_.add_edge(*current_, target)) return false;
    note_link(target);
    return true;
  }

  /// combined_sim(candidate, arriving node) from the cached state.
  double score(NodeId candidate) {
    ensure_demographic();
    const NodeId v = *current_;
    double structural = 0.0;
    const std::size_t dc = graph_.neighbors(candidate).size();
    if (schema_.weight_fof != 0.0) {
      const std::size_t smaller = std::min(dc, graph_.neighbors(v).size());
      if (smaller != 0) structural += schema_.weight_fof * static_cast<double>(common_[candidate]) / smaller;
    }
    if (schema_.weight_pa != 0.0) {
      const std::size_t top = graph_.max_degree();
      if (top != 0) structural += schema_.weight_pa * static_cast<double>(dc) / static_cast<double>(top);
    }
    return schema_.alpha * demographic_cache_[candidate] + schema_.beta * structural;
  }

  /// The k-th (0-based) eligible node in ascending id order.
  NodeId kth_eligible(std::size_t k) const {
    // Neighbors of the arriving node are sorted and all smaller than it, so
    // skip over them while counting.
    auto candidate = static_cast<NodeId>(k);
    for (NodeId u : graph_.neighbors(*current_)) {
      if (u <= candidate) {
        ++candidate;
      } else {
        break;
      }
    }
    return candidate;
  }

  /// Step (a). Returns the node linked, or nullopt (recording exhaustion)
  /// when no eligible node is left.
  std::optional<NodeId> similarity_link_step(Rng& rng, NodeTrace& trace) {
    const std::size_t eligible = eligible_count();
    if (eligible == 0) {
      trace.exhausted = true;
      return std::nullopt;
    }
    NodeId chosen = 0;
    if (rng.bernoulli(params_.p_sim)) {
      const NodeId v = *current_;
      weights_.assign(v, 0.0);
      double total = 0.0;
      for (NodeId c = 0; c < v; ++c) {
        if (linked_[c]) continue;
        const double w = score(c);
        weights_[c] = w;
        total += w;
      }
      if (total > 0.0) {
        chosen = roulette(rng.uniform() * total);
        ++trace.similarity_edges;
      } else {
        chosen = kth_eligible(rng.below(eligible));
        ++trace.random_edges;
        ++trace.zero_score_fallbacks;
      }
    } else {
      chosen = kth_eligible(rng.below(eligible));
      ++trace.random_edges;
    }
    connect(chosen);
    return chosen;
  }

  /// Step (b). Links up to min(triad_count, budget) eligible neighbors of
  /// the anchors, best score first with ties to the lower id. With no
  /// eligible neighbor at all, links that many uniformly random nodes.
  std::vector<NodeId> triad_step(std::span<const NodeId> anchors, std::size_t budget, Rng& rng,
                                 NodeTrace& trace) {
    std::vector<NodeId> linked;
    if (!rng.bernoulli(params_.p_triad)) return linked;
    const std::size_t want = std::min(params_.triad_count, budget);
    if (want == 0) return linked;

    std::vector<std::pair<double, NodeId>> ranked;
    for (NodeId anchor : anchors) {
      for (NodeId c : graph_.neighbors(anchor)) {
        if (!is_eligible(c) || seen_[c]) continue;
        seen_[c] = 1;
        ranked.emplace_back(0.0, c);
      }
    }
    for (auto& [s, c] : ranked) {
      seen_[c] = 0;
      s = score(c);
    }

    if (!ranked.empty()) {
      const std::size_t take = std::min(want, ranked.size());
      std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take), ranked.end(),
                        [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
      for (std::size_t k = 0; k < take; ++k) {
        connect(ranked[k].second);
        linked.push_back(ranked[k].second);
        ++trace.triad_edges;
      }
      return linked;
    }

    for (std::size_t k = 0; k < want; ++k) {
      const std::size_t eligible = eligible_count();
      if (eligible == 0) break;
      const NodeId c = kth_eligible(rng.below(eligible));
      connect(c);
      linked.push_back(c);
      ++trace.triad_random_edges;
    }
    return linked;
  }

  std::vector<NodeId> triad_step(NodeId anchor, std::size_t budget, Rng& rng, NodeTrace& trace) {
    return triad_step(std::span<const NodeId>(&anchor, 1), budget, rng, trace);
  }

  /// Full arrival of the current node: draw m, then alternate steps (a)
  /// and (b) until the node has m links or runs out of candidates.
  NodeTrace attach_current(Rng& rng) {
    NodeTrace trace;
    const NodeId v = *current_;
    trace.target_degree = draw_target_degree(params_, v, rng);
    while (graph_.degree(v) < trace.target_degree) {
      const auto anchor = similarity_link_step(rng, trace);
      if (!anchor) break;
      const std::size_t degree = graph_.degree(v);
      if (degree >= trace.target_degree) break;
      if (params_.anchor == AnchorMode::current) {
        triad_step(*anchor, trace.target_degree - degree, rng, trace);
      } else {
        const std::vector<NodeId> anchors(graph_.neighbors(v).begin(), graph_.neighbors(v).end());
        triad_step(anchors, trace.target_degree - degree, rng, trace);
      }
    }
    return trace;
  }

 private:
  void begin(NodeId v) {
    for (NodeId c : touched_) common_[c] = 0;
    touched_.clear();
    if (current_) {
      for (NodeId u : graph_.neighbors(*current_)) {
        if (u < linked_.size()) linked_[u] = 0;
      }
    }
    current_ = v;
    const std::size_t size = graph_.node_count();
    if (linked_.size() < size) {
      linked_.resize(size, 0);
      seen_.resize(size, 0);
      common_.resize(size, 0);
    }
    demographic_ready_ = false;
  }

  void note_link(NodeId target) {
    const NodeId v = *current_;
    linked_[target] = 1;
    for (NodeId c : graph_.neighbors(target)) {
      if (c == v) continue;
      if (common_[c]++ == 0) touched_.push_back(c);
    }
  }

  void ensure_demographic() {
    if (demographic_ready_) return;
    const NodeId v = *current_;
    demographic_cache_.resize(v);
    const NodeProfile& pv = profiles_[v];
    for (NodeId c = 0; c < v; ++c) demographic_cache_[c] = demographic_(profiles_[c], pv);
    demographic_ready_ = true;
  }

  NodeId roulette(double target) const {
    double cumulative = 0.0;
    NodeId last_positive = 0;
    for (NodeId c = 0; c < weights_.size(); ++c) {
      if (weights_[c] <= 0.0) continue;
      cumulative += weights_[c];
      last_positive = c;
      if (cumulative > target) return c;
    }
    return last_positive;
  }

  const AttributeSchema& schema_;
  std::span<const NodeProfile> profiles_;
  GenParams params_;
  DemographicTable demographic_;
  Graph graph_;

  std::optional<NodeId> current_;
  std::vector<char> linked_;
  std::vector<char> seen_;
  std::vector<std::uint32_t> common_;
  std::vector<NodeId> touched_;
  std::vector<double> demographic_cache_;
  bool demographic_ready_ = false;
  std::vector<double> weights_;
};

struct Generated {
  Graph graph;
  GenTrace trace;
};

/// Builds a network over `profiles` (one per node) drawing from `rng`.
inline Generated generate(const AttributeSchema& schema, std::span<const NodeProfile> profiles,
                          const GenParams& params, Rng& rng) {
  validate(params);
  if (profiles.size() != params.n) {
    throw ConfigError("expected " + std::to_string(params.n) + " profiles, got " + std::to_string(profiles.size()));
  }
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (!conforms(profiles[i], schema)) throw ConfigError("profile " + std::to_string(i) + " does not match the schema");
  }

  Graph seed;
  seed.reserve(params.n);
  for (int k = 0; k < 3; ++k) seed.add_node();
  seed.add_edge(0, 1);
  seed.add_edge(0, 2);
  seed.add_edge(1, 2);

  Generated out;
  out.trace.seed_edges = 3;
  out.trace.nodes.resize(params.n);
  Construction construction(schema, profiles, params, std::move(seed));
  for (std::size_t v = 3; v < params.n; ++v) {
    construction.arrive();
    out.trace.nodes[v] = construction.attach_current(rng);
  }
  out.graph = std::move(construction).take_graph();
  return out;
}

/// Same, with a fresh Rng seeded from params.seed.
inline Generated generate(const AttributeSchema& schema, std::span<const NodeProfile> profiles,
                          const GenParams& params) {
  Rng rng(params.seed);
  return generate(schema, profiles, params, rng);
}

struct Simulation {
  std::vector<NodeProfile> profiles;
  Graph graph;
  GenTrace trace;
  double generation_seconds = 0.0;  ///< generate() only, excluding profile sampling
};

/// One complete run from a single seed. Without `profiles`, they are sampled
/// first from the same Rng that then drives construction.
inline Simulation simulate(const AttributeSchema& schema, const GenParams& params,
                           std::optional<std::span<const NodeProfile>> profiles = std::nullopt) {
  Simulation out;
  Rng rng(params.seed);
  if (profiles) {
    out.profiles.assign(profiles->begin(), profiles->end());
  } else {
    out.profiles = sample_profiles(schema, params.n, rng);
  }
  const auto start = std::chrono::steady_clock::now();
  Generated g = generate(schema, out.profiles, params, rng);
  out.generation_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.graph = std::move(g.graph);
  out.trace = std::move(g.trace);
  return out;
}

}  // namespace socnetgen

#endif  // SOCNETGEN_GENERATOR_HPP_
