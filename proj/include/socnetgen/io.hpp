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

// Serialization: run configs and metric reports (JSON), edge lists,
// delimiter-separated attribute tables, and GraphML export.

#ifndef SOCNETGEN_IO_HPP_
#define SOCNETGEN_IO_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "socnetgen/diagnostics.hpp"
#include "socnetgen/generator.hpp"
#include "socnetgen/graph.hpp"
#include "socnetgen/metrics.hpp"
#include "socnetgen/schema.hpp"

namespace socnetgen {

using ordered_json = nlohmann::ordered_json;

/// Everything one generation run needs.
struct RunConfig {
  AttributeSchema schema;
  GenParams params;
  /// Attribute table to load profiles from; sampled from the schema when empty.
  std::optional<std::string> profile_table;
  std::string output_prefix;
  /// The config had no seed and params.seed holds kDefaultSeed.
  bool seed_defaulted = false;
};

namespace detail {

inline void reject_unknown_keys(const ordered_json& object, std::initializer_list<std::string_view> allowed,
                                const std::string& where) {
  if (!object.is_object()) throw ConfigError(where + ": expected an object");
  std::vector<std::string> unknown;
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) unknown.push_back(key);
  }
  if (unknown.empty()) return;
  std::string list;
  for (const auto& k : unknown) list += (list.empty() ? "" : ", ") + k;
  throw ConfigError(where + ": unknown key(s): " + list);
}

inline double get_real(const ordered_json& object, const char* key, double fallback, const std::string& where) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return v.get<double>();
}

inline std::uint64_t get_unsigned(const ordered_json& object, const char* key, std::uint64_t fallback,
                                  const std::string& where) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    throw ConfigError(where + "." + key + ": must be >= 0, got " + v.dump());
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0 && std::floor(d) == d && d < 1.8e19) return static_cast<std::uint64_t>(d);
  }
  throw ConfigError(where + "." + key + ": expected a non-negative integer, got " + v.dump());
}

inline AttributeSpec parse_attribute(const ordered_json& j, std::size_t index) {
  const std::string where = "schema.attributes[" + std::to_string(index) + "]";
  reject_unknown_keys(j, {"name", "kind", "levels", "proportions", "weight", "rho"}, where);
  AttributeSpec spec;
  if (!j.contains("name") || !j["name"].is_string()) throw ConfigError(where + ".name: required string");
  spec.name = j["name"].get<std::string>();
  if (!j.contains("kind") || !j["kind"].is_string()) throw ConfigError(where + ".kind: required string");
  const auto kind = parse_attribute_kind(j["kind"].get<std::string>());
  if (!kind) throw ConfigError(where + ".kind: must be categorical, ordinal or numerical");
  spec.kind = *kind;
  if (!j.contains("levels") || !j["levels"].is_array()) throw ConfigError(where + ".levels: required array");
  for (const auto& level : j["levels"]) {
    if (spec.kind == AttributeKind::numerical) {
      if (!level.is_number()) throw ConfigError(where + ".levels: numerical levels must be numbers");
      spec.values.push_back(level.get<double>());
    } else {
      if (level.is_string()) {
        spec.labels.push_back(level.get<std::string>());
      } else if (level.is_number()) {
        spec.labels.push_back(level.dump());
      } else {
        throw ConfigError(where + ".levels: labels must be strings");
      }
    }
  }
  if (j.contains("proportions")) {
    if (!j["proportions"].is_array()) throw ConfigError(where + ".proportions: expected an array");
    for (const auto& p : j["proportions"]) {
      if (!p.is_number()) throw ConfigError(where + ".proportions: entries must be numbers");
      spec.proportions.push_back(p.get<double>());
    }
  } else {
    spec.proportions.assign(spec.level_count(), 1.0);
  }
  spec.weight = get_real(j, "weight", 1.0, where);
  if (j.contains("rho")) {
    if (spec.kind == AttributeKind::categorical) throw ConfigError(where + ".rho: not used by categorical attributes");
    spec.rho = get_real(j, "rho", 0.0, where);
    if (!(spec.rho > 0.0)) throw ConfigError(where + ".rho: must be > 0");
  }
  normalize(spec);
  return spec;
}

}  // namespace detail

/// Parses and validates a JSON run config. Relative file paths are kept as
/// written; load_config() resolves them.
///
/// Layout (every key except params.n optional):
///   { "schema":  { "alpha", "beta", "weight_fof", "weight_pa",
///                  "difference": "similarity" | "raw",
///                  "attributes": [ { "name", "kind", "levels",
///                                    "proportions", "weight", "rho" } ] },
///     "params":  { "n", "m_min", "m_max", "p_sim", "p_triad",
///                  "triad_count", "seed", "anchor": "current" | "all" },
///     "profiles": { "source": "sample" | "table", "path" },
///     "output":  { "prefix" } }
inline RunConfig parse_config(std::string_view text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  detail::reject_unknown_keys(root, {"schema", "params", "profiles", "output"}, "config");
  RunConfig cfg;

  if (root.contains("schema")) {
    const auto& s = root["schema"];
    detail::reject_unknown_keys(s, {"alpha", "beta", "weight_fof", "weight_pa", "difference", "attributes"},
                                "schema");
    cfg.schema.alpha = detail::get_real(s, "alpha", 1.0, "schema");
    cfg.schema.beta = detail::get_real(s, "beta", 1.0, "schema");
    cfg.schema.weight_fof = detail::get_real(s, "weight_fof", 1.0, "schema");
    cfg.schema.weight_pa = detail::get_real(s, "weight_pa", 1.0, "schema");
    if (s.contains("difference")) {
      const auto& d = s["difference"];
      if (d == "similarity") {
        cfg.schema.difference_mode = DifferenceMode::similarity;
      } else if (d == "raw") {
        cfg.schema.difference_mode = DifferenceMode::raw;
      } else {
        throw ConfigError("schema.difference: must be \"similarity\" or \"raw\"");
      }
    }
    if (s.contains("attributes")) {
      if (!s["attributes"].is_array()) throw ConfigError("schema.attributes: expected an array");
      for (std::size_t i = 0; i < s["attributes"].size(); ++i) {
        cfg.schema.attributes.push_back(detail::parse_attribute(s["attributes"][i], i));
      }
    }
  }
  normalize(cfg.schema);

  if (!root.contains("params")) throw ConfigError("config: missing \"params\"");
  const auto& p = root["params"];
  detail::reject_unknown_keys(p, {"n", "m_min", "m_max", "p_sim", "p_triad", "triad_count", "seed", "anchor"},
                              "params");
  if (!p.contains("n")) throw ConfigError("params.n: required");
  cfg.params.n = detail::get_unsigned(p, "n", 0, "params");
  cfg.params.m_min = detail::get_unsigned(p, "m_min", 1, "params");
  cfg.params.m_max = detail::get_unsigned(p, "m_max", cfg.params.m_min, "params");
  cfg.params.p_sim = detail::get_real(p, "p_sim", 1.0, "params");
  cfg.params.p_triad = detail::get_real(p, "p_triad", 1.0, "params");
  cfg.params.triad_count = detail::get_unsigned(p, "triad_count", 0, "params");
  cfg.seed_defaulted = !p.contains("seed");
  cfg.params.seed = detail::get_unsigned(p, "seed", kDefaultSeed, "params");
  if (p.contains("anchor")) {
    if (p["anchor"] == "current") {
      cfg.params.anchor = AnchorMode::current;
    } else if (p["anchor"] == "all") {
      cfg.params.anchor = AnchorMode::all;
    } else {
      throw ConfigError("params.anchor: must be \"current\" or \"all\"");
    }
  }
  try {
    validate(cfg.params);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("params: ") + e.what());
  }

  if (root.contains("profiles")) {
    const auto& pr = root["profiles"];
    detail::reject_unknown_keys(pr, {"source", "path"}, "profiles");
    const std::string source = pr.value("source", std::string("sample"));
    if (source == "table") {
      if (!pr.contains("path") || !pr["path"].is_string()) throw ConfigError("profiles.path: required for a table source");
      cfg.profile_table = pr["path"].get<std::string>();
    } else if (source != "sample") {
      throw ConfigError("profiles.source: must be \"sample\" or \"table\"");
    } else if (pr.contains("path")) {
      throw ConfigError("profiles.path: only valid with source \"table\"");
    }
  }
  if (root.contains("output")) {
    const auto& o = root["output"];
    detail::reject_unknown_keys(o, {"prefix"}, "output");
    if (o.contains("prefix")) {
      if (!o["prefix"].is_string()) throw ConfigError("output.prefix: expected a string");
      cfg.output_prefix = o["prefix"].get<std::string>();
    }
  }
  return cfg;
}

/// Canonical JSON form of a config: every field explicit, fixed key order.
inline std::string serialize_config(const RunConfig& cfg) {
  ordered_json root;
  ordered_json schema;
  schema["alpha"] = cfg.schema.alpha;
  schema["beta"] = cfg.schema.beta;
  schema["weight_fof"] = cfg.schema.weight_fof;
  schema["weight_pa"] = cfg.schema.weight_pa;
  schema["difference"] = cfg.schema.difference_mode == DifferenceMode::similarity ? "similarity" : "raw";
  schema["attributes"] = ordered_json::array();
  for (const auto& spec : cfg.schema.attributes) {
    ordered_json a;
    a["name"] = spec.name;
    a["kind"] = std::string(to_string(spec.kind));
    if (spec.kind == AttributeKind::numerical) {
      a["levels"] = spec.values;
    } else {
      a["levels"] = spec.labels;
    }
    a["proportions"] = spec.proportions;
    a["weight"] = spec.weight;
    if (spec.kind != AttributeKind::categorical) a["rho"] = spec.rho;
    schema["attributes"].push_back(std::move(a));
  }
  root["schema"] = std::move(schema);
  ordered_json params;
  params["n"] = cfg.params.n;
  params["m_min"] = cfg.params.m_min;
  params["m_max"] = cfg.params.m_max;
  params["p_sim"] = cfg.params.p_sim;
  params["p_triad"] = cfg.params.p_triad;
  params["triad_count"] = cfg.params.triad_count;
  params["seed"] = cfg.params.seed;
  params["anchor"] = cfg.params.anchor == AnchorMode::current ? "current" : "all";
  root["params"] = std::move(params);
  ordered_json profiles;
  if (cfg.profile_table) {
    profiles["source"] = "table";
    profiles["path"] = *cfg.profile_table;
  } else {
    profiles["source"] = "sample";
  }
  root["profiles"] = std::move(profiles);
  root["output"] = ordered_json{{"prefix", cfg.output_prefix}};
  return root.dump(2) + "\n";
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads a config file, resolving a relative profile-table path against the
/// config's directory and failing fast if that table does not exist.
inline RunConfig load_config(const std::filesystem::path& path) {
  RunConfig cfg = parse_config(read_file(path));
  if (cfg.profile_table) {
    std::filesystem::path table(*cfg.profile_table);
    if (table.is_relative()) table = path.parent_path() / table;
    if (!std::filesystem::exists(table)) throw ConfigError("profiles.path: no such file " + table.string());
    cfg.profile_table = table.string();
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Edge lists

/// One "u<TAB>v" line per edge, u < v, lexicographic order.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << u << '\t' << v << '\n';
}

/// Reads whitespace-separated 0-based id pairs. Blank lines and lines
/// starting with '#' are skipped; repeated edges in either orientation are
/// merged. The node count is max id + 1 unless `node_count` is larger.
inline Graph read_edge_list(std::istream& in, std::size_t node_count = 0) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  std::size_t max_id_plus_one = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) throw FormatError("expected two node ids", line_no);
    const auto parse_id = [&](const std::string& s) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || v > 0xFFFFFFFEull) {
        throw FormatError("'" + s + "' is not a valid node id", line_no);
      }
      return static_cast<NodeId>(v);
    };
    const NodeId u = parse_id(a);
    const NodeId v = parse_id(b);
    if (u == v) throw FormatError("self-loop on node " + a, line_no);
    edges.emplace_back(u, v);
    max_id_plus_one = std::max<std::size_t>({max_id_plus_one, std::size_t{u} + 1, std::size_t{v} + 1});
  }
  Graph g(std::max(node_count, max_id_plus_one));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_edge_list(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Delimiter-separated tables

namespace detail {

inline std::string trim_field(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  s = s.substr(b, e - b + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

inline std::vector<std::string> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    out.push_back(trim_field(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Header row plus data rows. Blank lines are skipped. Quoting is limited to
/// stripping one pair of surrounding double quotes from a field.
inline Table read_table(std::istream& in, char delimiter = ',') {
  Table t;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = detail::split_fields(line, delimiter);
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw FormatError("expected " + std::to_string(t.header.size()) + " fields, got " + std::to_string(fields.size()),
                        line_no);
    }
    t.rows.push_back(std::move(fields));
    t.lines.push_back(line_no);
  }
  if (!have_header) throw FormatError("table is empty (no header row)");
  return t;
}

/// ',' for most files, '\t' for .tsv/.tab.
inline char delimiter_for(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".tsv" || ext == ".tab" ? '\t' : ',';
}

inline std::vector<NodeProfile> load_profiles_file(const AttributeSchema& schema, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return load_profiles(schema, read_table(in, delimiter_for(path)));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

inline void write_profiles(const AttributeSchema& schema, std::span<const NodeProfile> profiles, std::ostream& out,
                           char delimiter = ',') {
  for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
    if (a > 0) out << delimiter;
    out << schema.attributes[a].name;
  }
  out << '\n';
  for (const auto& p : profiles) {
    for (std::size_t a = 0; a < schema.attributes.size(); ++a) {
      if (a > 0) out << delimiter;
      out << schema.attributes[a].level_label(p.levels[a]);
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// GraphML

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// GraphML document; with a schema and profiles, one node data key per attribute.
inline void write_graphml(const Graph& g, std::ostream& out, const AttributeSchema* schema = nullptr,
                          std::span<const NodeProfile> profiles = {}) {
  const bool with_attributes = schema != nullptr && !schema->attributes.empty() && profiles.size() == g.node_count();
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
         "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
         "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
         "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";
  if (with_attributes) {
    for (std::size_t a = 0; a < schema->attributes.size(); ++a) {
      const auto& spec = schema->attributes[a];
      out << "  <key id=\"d" << a << "\" for=\"node\" attr.name=\"" << detail::xml_escape(spec.name)
          << "\" attr.type=\"" << (spec.kind == AttributeKind::numerical ? "double" : "string") << "\"/>\n";
    }
  }
  out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "    <node id=\"n" << v << "\"";
    if (!with_attributes) {
      out << "/>\n";
      continue;
    }
    out << ">";
    for (std::size_t a = 0; a < schema->attributes.size(); ++a) {
      out << "<data key=\"d" << a << "\">"
          << detail::xml_escape(schema->attributes[a].level_label(profiles[v].levels[a])) << "</data>";
    }
    out << "</node>\n";
  }
  for (const auto& [u, v] : g.edges()) out << "    <edge source=\"n" << u << "\" target=\"n" << v << "\"/>\n";
  out << "  </graph>\n</graphml>\n";
}

// ---------------------------------------------------------------------------
// Reports

namespace detail {

inline ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

inline std::optional<double> read_optional(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number()) throw FormatError(std::string("report field '") + key + "' is not a number");
  return j[key].get<double>();
}

}  // namespace detail

inline ordered_json report_to_json(const MetricsReport& r) {
  ordered_json j;
  j["nodes"] = r.node_count;
  j["edges"] = r.edge_count;
  j["density"] = detail::optional_number(r.density);
  j["clustering"] = ordered_json{{"average_local", r.avg_local_clustering},
                                 {"global_transitivity", r.global_transitivity}};
  ordered_json geo;
  geo["mean"] = detail::optional_number(r.geodesic.mean);
  geo["method"] = std::string(to_string(r.geodesic.method));
  geo["sources"] = r.geodesic.sources;
  geo["component_size"] = r.geodesic.component_size;
  geo["seed"] = r.geodesic.method == GeodesicMethod::sampled ? ordered_json(r.geodesic.seed) : ordered_json(nullptr);
  j["geodesic"] = std::move(geo);
  if (r.powerlaw) {
    ordered_json pl;
    pl["alpha"] = r.powerlaw->alpha;
    pl["x_min"] = r.powerlaw->x_min;
    pl["ks_statistic"] = r.powerlaw->ks_statistic;
    pl["tail_size"] = r.powerlaw->tail_size;
    pl["degenerate"] = r.powerlaw->degenerate;
    pl["estimator"] = std::string(to_string(r.powerlaw->estimator));
    j["powerlaw"] = std::move(pl);
  } else {
    j["powerlaw"] = nullptr;
  }
  j["powerlaw_error"] = r.powerlaw_error.empty() ? ordered_json(nullptr) : ordered_json(r.powerlaw_error);
  j["assortativity"] = detail::optional_number(r.assortativity);
  return j;
}

inline void write_report(const MetricsReport& r, std::ostream& out) { out << report_to_json(r).dump(2) << '\n'; }

/// Inverse of write_report.
inline MetricsReport read_report(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("nodes") || !j.contains("clustering") || !j.contains("geodesic")) {
    throw FormatError("not a metrics report");
  }
  try {
    MetricsReport r;
    r.node_count = j["nodes"].get<std::size_t>();
    r.edge_count = j["edges"].get<std::size_t>();
    r.density = detail::read_optional(j, "density");
    r.avg_local_clustering = j["clustering"]["average_local"].get<double>();
    r.global_transitivity = j["clustering"]["global_transitivity"].get<double>();
    const auto& geo = j["geodesic"];
    r.geodesic.mean = detail::read_optional(geo, "mean");
    r.geodesic.method = geo["method"] == "sampled" ? GeodesicMethod::sampled : GeodesicMethod::exact;
    r.geodesic.sources = geo["sources"].get<std::size_t>();
    r.geodesic.component_size = geo["component_size"].get<std::size_t>();
    if (geo.contains("seed") && !geo["seed"].is_null()) r.geodesic.seed = geo["seed"].get<std::uint64_t>();
    if (j.contains("powerlaw") && !j["powerlaw"].is_null()) {
      const auto& pl = j["powerlaw"];
      PowerLawFit fit;
      fit.alpha = pl["alpha"].get<double>();
      fit.x_min = pl["x_min"].get<std::uint64_t>();
      fit.ks_statistic = pl["ks_statistic"].get<double>();
      fit.tail_size = pl["tail_size"].get<std::size_t>();
      fit.degenerate = pl.value("degenerate", false);
      fit.estimator = pl.value("estimator", std::string("exact")) == "approximate" ? PowerLawEstimator::approximate
                                                                                   : PowerLawEstimator::exact;
      r.powerlaw = fit;
    }
    if (j.contains("powerlaw_error") && j["powerlaw_error"].is_string()) {
      r.powerlaw_error = j["powerlaw_error"].get<std::string>();
    }
    r.assortativity = detail::read_optional(j, "assortativity");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed metrics report: ") + e.what());
  }
}

/// One compared metric: b - a and (b - a) / |a|. The relative delta is 0
/// when both values are 0, and null when only a is 0 or either side is
/// missing.
struct MetricDelta {
  std::string name;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> delta;
  std::optional<double> relative_delta;
};

inline MetricDelta compare_metric(std::string name, std::optional<double> a, std::optional<double> b) {
  MetricDelta d{std::move(name), a, b, std::nullopt, std::nullopt};
  if (a && b) {
    d.delta = *b - *a;
    if (*a != 0.0) {
      d.relative_delta = (*b - *a) / std::abs(*a);
    } else if (*b == 0.0) {
      d.relative_delta = 0.0;
    }
  }
  return d;
}

/// The compared metrics, in document order.
inline std::vector<MetricDelta> compare_reports(const MetricsReport& a, const MetricsReport& b) {
  const auto alpha = [](const MetricsReport& r) {
    return r.powerlaw ? std::optional<double>(r.powerlaw->alpha) : std::nullopt;
  };
  return {
      compare_metric("nodes", static_cast<double>(a.node_count), static_cast<double>(b.node_count)),
      compare_metric("edges", static_cast<double>(a.edge_count), static_cast<double>(b.edge_count)),
      compare_metric("density", a.density, b.density),
      compare_metric("avg_local_clustering", a.avg_local_clustering, b.avg_local_clustering),
      compare_metric("global_transitivity", a.global_transitivity, b.global_transitivity),
      compare_metric("mean_geodesic", a.geodesic.mean, b.geodesic.mean),
      compare_metric("powerlaw_alpha", alpha(a), alpha(b)),
      compare_metric("assortativity", a.assortativity, b.assortativity),
  };
}

inline void write_comparison(const MetricsReport& a, const MetricsReport& b, std::ostream& out,
                             std::string_view label_a = "a", std::string_view label_b = "b") {
  ordered_json j;
  j["a"] = std::string(label_a);
  j["b"] = std::string(label_b);
  ordered_json metrics;
  for (const auto& d : compare_reports(a, b)) {
    metrics[d.name] = ordered_json{{"a", detail::optional_number(d.a)},
                                   {"b", detail::optional_number(d.b)},
                                   {"delta", detail::optional_number(d.delta)},
                                   {"relative_delta", detail::optional_number(d.relative_delta)}};
  }
  j["metrics"] = std::move(metrics);
  j["report_a"] = report_to_json(a);
  j["report_b"] = report_to_json(b);
  out << j.dump(2) << '\n';
}

/// "degree<TAB>count" per line, ascending degree.
inline void write_degree_histogram(const Graph& g, std::ostream& out) {
  for (const auto& [degree, count] : degree_histogram(g)) out << degree << '\t' << count << '\n';
}

inline ordered_json trace_summary(const GenTrace& trace, const GenParams& params, bool seed_defaulted) {
  ordered_json j;
  j["seed"] = params.seed;
  j["seed_defaulted"] = seed_defaulted;
  j["nodes"] = params.n;
  j["seed_edges"] = trace.seed_edges;
  j["total_edges"] = trace.total_edges();
  j["target_degree_sum"] = trace.total(&NodeTrace::target_degree);
  j["similarity_edges"] = trace.total(&NodeTrace::similarity_edges);
  j["random_edges"] = trace.total(&NodeTrace::random_edges);
  j["zero_score_fallbacks"] = trace.total(&NodeTrace::zero_score_fallbacks);
  j["triad_edges"] = trace.total(&NodeTrace::triad_edges);
  j["triad_random_edges"] = trace.total(&NodeTrace::triad_random_edges);
  std::size_t exhausted = 0;
  for (const auto& t : trace.nodes) exhausted += t.exhausted ? 1 : 0;
  j["exhausted_nodes"] = exhausted;
  return j;
}

}  // namespace socnetgen

#endif  // SOCNETGEN_IO_HPP_
