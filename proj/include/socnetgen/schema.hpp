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

// Demographic attribute declarations and per-node attribute assignment.

#ifndef SOCNETGEN_SCHEMA_HPP_
#define SOCNETGEN_SCHEMA_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <vector>

#include "socnetgen/diagnostics.hpp"
#include "socnetgen/random.hpp"

namespace socnetgen {

enum class AttributeKind { categorical, ordinal, numerical };

inline std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::categorical: return "categorical";
    case AttributeKind::ordinal: return "ordinal";
    case AttributeKind::numerical: return "numerical";
  }
  return "?";
}

inline std::optional<AttributeKind> parse_attribute_kind(std::string_view text) {
  if (text == "categorical") return AttributeKind::categorical;
  if (text == "ordinal") return AttributeKind::ordinal;
  if (text == "numerical") return AttributeKind::numerical;
  return std::nullopt;
}

/// How ordinal and numerical kernels turn a normalized difference d into a score.
enum class DifferenceMode {
  similarity,  ///< 1 - d: closer values score higher (default)
  raw,         ///< d as a score, the literal normalized difference
};

/// Shortest round-trip decimal form of `v`.
inline std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

inline std::optional<double> parse_number(std::string_view text) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

/// One demographic attribute.
///
/// Categorical and ordinal attributes are declared by `labels` (ordinal labels
/// in rank order, ranks 1..k); numerical attributes by their admissible
/// `values`. Node profiles store level indices into either list.
struct AttributeSpec {
  std::string name;
  AttributeKind kind = AttributeKind::categorical;
  std::vector<std::string> labels;
  std::vector<double> values;
  std::vector<double> proportions;
  double weight = 1.0;
  /// Difference normalizer. 0 means "derive from the domain" and is replaced by
  /// normalize(): k - 1 for ordinal, max - min for numerical, 1 when that is 0.
  double rho = 0.0;

  std::size_t level_count() const {
    return kind == AttributeKind::numerical ? values.size() : labels.size();
  }

  /// Rank (1-based) for ordinal levels, the value for numerical ones, the
  /// index for categorical ones.
  double level_value(std::uint32_t level) const {
    switch (kind) {
      case AttributeKind::numerical: return values.at(level);
      case AttributeKind::ordinal: return static_cast<double>(level) + 1.0;
      case AttributeKind::categorical: break;
    }
    return static_cast<double>(level);
  }

  std::string level_label(std::uint32_t level) const {
    return kind == AttributeKind::numerical ? format_number(values.at(level)) : labels.at(level);
  }

  /// Level index for a textual value, or nullopt when outside the domain.
  std::optional<std::uint32_t> find_level(std::string_view text) const {
    if (kind == AttributeKind::numerical) {
      const auto v = parse_number(text);
      if (!v) return std::nullopt;
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (std::abs(values[k] - *v) <= 1e-9 * std::max(1.0, std::abs(*v))) return static_cast<std::uint32_t>(k);
      }
      return std::nullopt;
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == text) return static_cast<std::uint32_t>(k);
    }
    return std::nullopt;
  }

  /// Largest possible |a - b| between two admissible level values.
  double domain_width() const {
    if (level_count() == 0) return 0.0;
    if (kind == AttributeKind::numerical) {
      const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
      return *hi - *lo;
    }
    return static_cast<double>(level_count() - 1);
  }
};

/// Validates `spec` and brings it to canonical form: proportions sum to 1 and
/// rho is resolved. Throws ConfigError naming the attribute and constraint.
inline void normalize(AttributeSpec& spec) {
  const auto fail = [&](const std::string& what) {
    throw ConfigError("attribute '" + spec.name + "': " + what);
  };
  if (spec.name.empty()) throw ConfigError("attribute with empty name");
  const std::size_t k = spec.level_count();
  if (k == 0) fail("at least one level is required");
  if (spec.kind == AttributeKind::numerical) {
    if (!spec.labels.empty()) fail("numerical attributes take numeric values, not labels");
    for (double v : spec.values) {
      if (!std::isfinite(v)) fail("non-finite numerical value");
    }
    std::vector<double> sorted = spec.values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("duplicate numerical value");
  } else {
    if (!spec.values.empty()) fail("categorical/ordinal attributes take labels, not numeric values");
    std::set<std::string_view> seen;
    for (const auto& label : spec.labels) {
      if (!seen.insert(label).second) fail("duplicate level '" + label + "'");
    }
  }
  if (spec.proportions.size() != k) {
    fail("proportions has " + std::to_string(spec.proportions.size()) + " entries but there are " +
         std::to_string(k) + " levels");
  }
  double total = 0.0;
  for (double p : spec.proportions) {
    if (!(p >= 0.0) || !std::isfinite(p)) fail("proportions must be finite and non-negative");
    total += p;
  }
  if (!(total > 0.0)) fail("proportions must not all be zero");
  for (double& p : spec.proportions) p /= total;
  if (!(spec.weight >= 0.0) || !std::isfinite(spec.weight)) fail("weight must be finite and >= 0");
  if (spec.kind != AttributeKind::categorical) {
    if (spec.rho == 0.0) {
      const double width = spec.domain_width();
      spec.rho = width > 0.0 ? width : 1.0;
    }
    if (!(spec.rho > 0.0) || !std::isfinite(spec.rho)) fail("rho must be finite and > 0");
    if (spec.kind == AttributeKind::ordinal && spec.rho < spec.domain_width()) {
      fail("rho must be at least the largest rank difference (" + format_number(spec.domain_width()) + ")");
    }
  } else {
    spec.rho = 0.0;
  }
}

inline AttributeSpec make_categorical(std::string name, std::vector<std::string> labels,
                                      std::vector<double> proportions, double weight = 1.0) {
  AttributeSpec spec{std::move(name), AttributeKind::categorical, std::move(labels), {}, std::move(proportions),
                     weight, 0.0};
  normalize(spec);
  return spec;
}

inline AttributeSpec make_ordinal(std::string name, std::vector<std::string> ranked_labels,
                                  std::vector<double> proportions, double weight = 1.0) {
  AttributeSpec spec{std::move(name), AttributeKind::ordinal, std::move(ranked_labels), {}, std::move(proportions),
                     weight, 0.0};
  normalize(spec);
  return spec;
}

inline AttributeSpec make_numerical(std::string name, std::vector<double> values, std::vector<double> proportions,
                                    double weight = 1.0, double rho = 0.0) {
  AttributeSpec spec{std::move(name), AttributeKind::numerical, {}, std::move(values), std::move(proportions),
                     weight, rho};
  normalize(spec);
  return spec;
}

/// Attribute list plus the weights that combine demographic and structural terms.
struct AttributeSchema {
  std::vector<AttributeSpec> attributes;
  double alpha = 1.0;       ///< weight of the demographic term
  double beta = 1.0;        ///< weight of the structural term
  double weight_fof = 1.0;  ///< friend-of-friend weight inside the structural term
  double weight_pa = 1.0;   ///< preferential-attachment weight inside the structural term
  DifferenceMode difference_mode = DifferenceMode::similarity;

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t a = 0; a < attributes.size(); ++a) {
      if (attributes[a].name == name) return a;
    }
    return std::nullopt;
  }
};

/// Normalizes every attribute and checks the combiner weights. A schema with
/// alpha + beta == 0 is accepted with a warning: every score is then zero and
/// link formation degenerates to uniform random choice.
inline void normalize(AttributeSchema& schema) {
  std::set<std::string_view> names;
  for (auto& spec : schema.attributes) {
    normalize(spec);
    if (!names.insert(spec.name).second) throw ConfigError("duplicate attribute name '" + spec.name + "'");
  }
  const auto check = [](double v, const char* field) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(std::string(field) + " must be finite and >= 0");
  };
  check(schema.alpha, "alpha");
  check(schema.beta, "beta");
  check(schema.weight_fof, "weight_fof");
  check(schema.weight_pa, "weight_pa");
  if (schema.alpha + schema.beta == 0.0) {
    warn("alpha + beta == 0: all similarity scores are zero, links form uniformly at random");
  }
}

/// Level index per schema attribute.
struct NodeProfile {
  std::vector<std::uint32_t> levels;

  friend bool operator==(const NodeProfile&, const NodeProfile&) = default;
};

/// True when `profile` has one in-domain level per schema attribute.
inline bool conforms(const NodeProfile& profile, const AttributeSchema& schema) {
  if (profile.levels.size() != schema.attributes.size()) return false;
  for (std::size_t a = 0; a < profile.levels.size(); ++a) {
    if (profile.levels[a] >= schema.attributes[a].level_count()) return false;
  }
  return true;
}

/// Draws `n` profiles, each attribute independently from its proportions.
///
/// Consumes exactly n * |attributes| uniforms from `rng`, node-major
/// (node 0 attribute 0, node 0 attribute 1, ..., node 1 attribute 0, ...).
inline std::vector<NodeProfile> sample_profiles(const AttributeSchema& schema, std::size_t n, Rng& rng) {
  std::vector<std::vector<double>> cumulative;
  cumulative.reserve(schema.attributes.size());
  for (const auto& spec : schema.attributes) {
    std::vector<double> c(spec.proportions.size());
    std::partial_sum(spec.proportions.begin(), spec.proportions.end(), c.begin());
    cumulative.push_back(std::move(c));
  }
  std::vector<NodeProfile> out(n);
  for (auto& profile : out) {
    profile.levels.resize(schema.attributes.size());
    for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
      const double u = rng.uniform();
      const auto& c = cumulative[a];
      auto level = static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), u) - c.begin());
      if (level >= c.size()) {
        // u landed past a cumulative total a rounding step below 1.
        const auto& p = schema.attributes[a].proportions;
        level = c.size() - 1;
        while (level > 0 && p[level] == 0.0) --level;
      }
      profile.levels[a] = static_cast<std::uint32_t>(level);
    }
  }
  return out;
}

/// Delimiter-separated data with a header row. `lines` holds the 1-based
/// source line of each row when known.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;
};

/// Maps table rows to profiles in row order. Columns are matched to attributes
/// by header name; extra columns are ignored.
inline std::vector<NodeProfile> load_profiles(const AttributeSchema& schema, const Table& table) {
  std::unordered_map<std::string_view, std::size_t> column_of;
  for (std::size_t c = 0; c < table.header.size(); ++c) column_of.emplace(table.header[c], c);
  std::vector<std::size_t> columns;
  for (const auto& spec : schema.attributes) {
    auto it = column_of.find(spec.name);
    if (it == column_of.end()) throw FormatError("attribute table has no column '" + spec.name + "'");
    columns.push_back(it->second);
  }
  std::vector<NodeProfile> out(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = r < table.lines.size() ? table.lines[r] : 0;
    out[r].levels.resize(schema.attributes.size());
    for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
      const auto& spec = schema.attributes[a];
      if (columns[a] >= row.size()) {
        throw FormatError("row " + std::to_string(r + 1) + ": missing value for attribute '" + spec.name + "'", line);
      }
      const auto level = spec.find_level(row[columns[a]]);
      if (!level) {
        throw FormatError("row " + std::to_string(r + 1) + ": value '" + row[columns[a]] +
                              "' is not in the domain of attribute '" + spec.name + "'",
                          line);
      }
      out[r].levels[a] = *level;
    }
  }
  return out;
}

}  // namespace socnetgen

#endif  // SOCNETGEN_SCHEMA_HPP_
