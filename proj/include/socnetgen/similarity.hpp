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

// Link-formation similarity kernels.
//
// A pair score is alpha * D + beta * S, where D is a weighted sum of
// per-attribute demographic similarities and S is a weighted sum of a
// friend-of-friend overlap and a normalized-degree (preferential attachment)
// term. Scores are raw weighted sums; they are only ever compared or used as
// sampling weights, so no normalization by total weight is applied.

#ifndef SOCNETGEN_SIMILARITY_HPP_
#define SOCNETGEN_SIMILARITY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "socnetgen/diagnostics.hpp"
#include "socnetgen/graph.hpp"
#include "socnetgen/schema.hpp"

namespace socnetgen {

inline double categorical_sim(std::uint32_t a, std::uint32_t b) { return a == b ? 1.0 : 0.0; }

/// 1 - |a - b| / rho for ranks a, b (raw mode: |a - b| / rho).
inline double ordinal_sim(double rank_a, double rank_b, double rho,
                          DifferenceMode mode = DifferenceMode::similarity) {
  if (!(rho > 0.0)) throw ConfigError("ordinal rho must be > 0");
  const double d = std::min(std::abs(rank_a - rank_b) / rho, 1.0);
  return mode == DifferenceMode::similarity ? 1.0 - d : d;
}

/// 1 - |a - b| / rho (raw mode: |a - b| / rho). A difference wider than rho
/// is clamped to the extreme score with a warning.
inline double numerical_sim(double a, double b, double rho, DifferenceMode mode = DifferenceMode::similarity) {
  if (!(rho > 0.0)) throw ConfigError("numerical rho must be > 0");
  double d = std::abs(a - b) / rho;
  if (d > 1.0) {
    warn("numerical difference " + format_number(std::abs(a - b)) + " exceeds rho " + format_number(rho) +
         "; clamped");
    d = 1.0;
  }
  return mode == DifferenceMode::similarity ? 1.0 - d : d;
}

/// Similarity of two levels of one attribute.
inline double attribute_sim(const AttributeSpec& spec, std::uint32_t a, std::uint32_t b, DifferenceMode mode) {
  switch (spec.kind) {
    case AttributeKind::categorical: return categorical_sim(a, b);
    case AttributeKind::ordinal: return ordinal_sim(spec.level_value(a), spec.level_value(b), spec.rho, mode);
    case AttributeKind::numerical: return numerical_sim(spec.level_value(a), spec.level_value(b), spec.rho, mode);
  }
  return 0.0;
}

/// Weighted sum of per-attribute similarities.
inline double demographic_sim(const NodeProfile& pi, const NodeProfile& pj, const AttributeSchema& schema) {
  double total = 0.0;
  for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
    const auto& spec = schema.attributes[a];
    total += spec.weight * attribute_sim(spec, pi.levels[a], pj.levels[a], schema.difference_mode);
  }
  return total;
}

/// Common neighbors over the smaller of the two degrees; 0 if either is isolated.
inline double fof_sim(const Graph& g, NodeId i, NodeId j) {
  const std::size_t smaller = std::min(g.degree(i), g.degree(j));
  if (smaller == 0) return 0.0;
  return static_cast<double>(common_neighbor_count(g, i, j)) / static_cast<double>(smaller);
}

/// Degree of `i` over the current maximum degree; 0 in an edgeless graph.
inline double pa_sim(const Graph& g, NodeId i) {
  const std::size_t top = g.max_degree();
  if (top == 0) return 0.0;
  return static_cast<double>(g.degree(i)) / static_cast<double>(top);
}

/// weight_fof * fof(i, j) + weight_pa * pa(i). `i` is the existing node; the
/// preferential-attachment term depends on it alone, so this is asymmetric.
inline double structural_sim(const Graph& g, NodeId i, NodeId j, const AttributeSchema& schema) {
  double s = 0.0;
  if (schema.weight_fof != 0.0) s += schema.weight_fof * fof_sim(g, i, j);
  if (schema.weight_pa != 0.0) s += schema.weight_pa * pa_sim(g, i);
  return s;
}

/// alpha * demographic + beta * structural, with `i` the existing node.
inline double combined_sim(const Graph& g, const NodeProfile& pi, const NodeProfile& pj, NodeId i, NodeId j,
                           const AttributeSchema& schema) {
  return schema.alpha * demographic_sim(pi, pj, schema) + schema.beta * structural_sim(g, i, j, schema);
}

/// Demographic similarity via precomputed level-pair tables.
///
/// Each attribute with k levels gets a k x k table of weighted scores, so a
/// pair evaluation is one lookup per attribute. Out-of-range numerical
/// differences are clamped here without a warning.
class DemographicTable {
 public:
  explicit DemographicTable(const AttributeSchema& schema) {
    for (const auto& spec : schema.attributes) {
      const std::size_t k = spec.level_count();
      std::vector<double> t(k * k);
      for (std::uint32_t a = 0; a < k; ++a) {
        for (std::uint32_t b = 0; b < k; ++b) {
          double v = 0.0;
          if (spec.kind == AttributeKind::categorical) {
            v = categorical_sim(a, b);
          } else {
            const double d = std::min(std::abs(spec.level_value(a) - spec.level_value(b)) / spec.rho, 1.0);
            v = schema.difference_mode == DifferenceMode::similarity ? 1.0 - d : d;
          }
          t[a * k + b] = spec.weight * v;
        }
      }
      sizes_.push_back(k);
      tables_.push_back(std::move(t));
    }
  }

  double operator()(const NodeProfile& pi, const NodeProfile& pj) const {
    double total = 0.0;
    for (std::size_t a = 0; a < tables_.size(); ++a) {
      total += tables_[a][pi.levels[a] * sizes_[a] + pj.levels[a]];
    }
    return total;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<double>> tables_;
};

}  // namespace socnetgen

#endif  // SOCNETGEN_SIMILARITY_HPP_
