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

// Subcommand implementations for the socnetgen CLI. Each returns a process
// exit code and writes results to `out`, diagnostics to `err`.

#ifndef SOCNETGEN_TOOLS_COMMANDS_HPP_
#define SOCNETGEN_TOOLS_COMMANDS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "socnetgen/socnetgen.hpp"

namespace socnetgen::cli {

namespace fs = std::filesystem;

struct AnalysisFlags {
  std::optional<std::size_t> sampled_geodesics;  ///< force sampled mode with k sources
  std::uint64_t geodesic_seed = kDefaultSeed;
  bool approximate_powerlaw = false;

  AnalysisOptions options() const {
    AnalysisOptions o;
    if (sampled_geodesics) {
      o.geodesic.mode = GeodesicOptions::Mode::sampled;
      o.geodesic.samples = *sampled_geodesics;
    }
    o.geodesic.seed = geodesic_seed;
    if (approximate_powerlaw) o.estimator = PowerLawEstimator::approximate;
    return o;
  }
};

/// Names accepted by --set and --vary.
inline std::vector<std::string> settable_names(const RunConfig& cfg) {
  std::vector<std::string> names = {"n",     "m_min", "m_max",      "p_sim",    "p_triad", "triad_count",
                                    "alpha", "beta",  "weight_fof", "weight_pa"};
  for (const auto& spec : cfg.schema.attributes) names.push_back("weight." + spec.name);
  return names;
}

/// Sets one generator or weight field. Revalidation is the caller's job.
inline void apply_setting(RunConfig& cfg, const std::string& name, double value) {
  const auto as_count = [&](double v) {
    if (!(v >= 0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw ConfigError(name + " must be a non-negative integer");
    }
    return static_cast<std::size_t>(v);
  };
  if (name == "n") {
    cfg.params.n = as_count(value);
  } else if (name == "m_min") {
    cfg.params.m_min = as_count(value);
  } else if (name == "m_max") {
    cfg.params.m_max = as_count(value);
  } else if (name == "p_sim") {
    cfg.params.p_sim = value;
  } else if (name == "p_triad") {
    cfg.params.p_triad = value;
  } else if (name == "triad_count") {
    cfg.params.triad_count = as_count(value);
  } else if (name == "alpha") {
    cfg.schema.alpha = value;
  } else if (name == "beta") {
    cfg.schema.beta = value;
  } else if (name == "weight_fof") {
    cfg.schema.weight_fof = value;
  } else if (name == "weight_pa") {
    cfg.schema.weight_pa = value;
  } else if (name.rfind("weight.", 0) == 0 && cfg.schema.index_of(name.substr(7))) {
    cfg.schema.attributes[*cfg.schema.index_of(name.substr(7))].weight = value;
  } else {
    std::string valid;
    for (const auto& n : settable_names(cfg)) valid += (valid.empty() ? "" : ", ") + n;
    throw ConfigError("unknown parameter '" + name + "'; valid names: " + valid);
  }
}

/// "name=value" pairs from --set.
inline void apply_settings(RunConfig& cfg, const std::vector<std::string>& settings) {
  for (const auto& s : settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects name=value, got '" + s + "'");
    const auto value = parse_number(s.substr(eq + 1));
    if (!value) throw ConfigError("--set " + s + ": value is not a number");
    apply_setting(cfg, s.substr(0, eq), *value);
  }
  normalize(cfg.schema);
  validate(cfg.params);
}

/// A --vary spec: "name=v1,v2,..." or "name=lo:hi[:step]" (inclusive).
struct Variation {
  std::string name;
  std::vector<double> values;
};

inline Variation parse_variation(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--vary expects name=values, got '" + spec + "'");
  Variation v{spec.substr(0, eq), {}};
  const std::string range = spec.substr(eq + 1);
  if (range.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(range);
    std::string item;
    while (std::getline(ss, item, ':')) {
      const auto x = parse_number(item);
      if (!x) throw ConfigError("--vary " + spec + ": '" + item + "' is not a number");
      parts.push_back(*x);
    }
    if (parts.size() < 2 || parts.size() > 3) throw ConfigError("--vary " + spec + ": expected lo:hi or lo:hi:step");
    const double step = parts.size() == 3 ? parts[2] : 1.0;
    if (!(step > 0)) throw ConfigError("--vary " + spec + ": step must be > 0");
    for (std::size_t k = 0;; ++k) {
      const double x = parts[0] + static_cast<double>(k) * step;
      if (x > parts[1] + 1e-9 * std::max(1.0, std::abs(parts[1]))) break;
      v.values.push_back(x);
    }
  } else {
    std::stringstream ss(range);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto x = parse_number(item);
      if (!x) throw ConfigError("--vary " + spec + ": '" + item + "' is not a number");
      v.values.push_back(*x);
    }
  }
  if (v.values.empty()) throw ConfigError("--vary " + spec + ": empty range");
  return v;
}

namespace detail {

inline void ensure_parent(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
}

inline void write_text(const fs::path& p, const std::string& text) {
  ensure_parent(p);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
  if (!f) throw std::runtime_error("write failed for " + p.string());
}

template <typename Writer>
std::string render(Writer&& w) {
  std::ostringstream ss;
  w(ss);
  return ss.str();
}

inline std::vector<NodeProfile> profiles_for(const RunConfig& cfg) {
  if (!cfg.profile_table) return {};
  return load_profiles_file(cfg.schema, *cfg.profile_table);
}

/// Report, or edge list to analyze, depending on the extension.
inline MetricsReport load_analyzable(const fs::path& path, const AnalysisFlags& flags) {
  if (path.extension() == ".json") return read_report(read_file(path));
  return analyze(read_edge_list_file(path), flags.options());
}

}  // namespace detail

struct GenerateOptions {
  fs::path config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_prefix;
  std::vector<std::string> settings;
  AnalysisFlags analysis;
};

/// Writes <prefix>.edges.tsv, .graphml, .profiles.csv, .metrics.json,
/// .trace.json and .degrees.tsv.
inline int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = load_config(o.config);
    apply_settings(cfg, o.settings);
    if (o.seed) {
      cfg.params.seed = *o.seed;
      cfg.seed_defaulted = false;
    }
    if (cfg.seed_defaulted) err << "warning: no seed given; using default seed " << kDefaultSeed << '\n';
    const std::string prefix = o.out_prefix.value_or(cfg.output_prefix);
    if (prefix.empty()) throw ConfigError("no output prefix: pass --out or set output.prefix in the config");

    std::vector<NodeProfile> table = detail::profiles_for(cfg);
    if (cfg.profile_table && table.size() != cfg.params.n) {
      throw ConfigError("attribute table has " + std::to_string(table.size()) + " rows but params.n is " +
                        std::to_string(cfg.params.n));
    }
    const Simulation sim = cfg.profile_table ? simulate(cfg.schema, cfg.params, std::span<const NodeProfile>(table))
                                             : simulate(cfg.schema, cfg.params);
    const MetricsReport report = analyze(sim.graph, o.analysis.options());

    detail::write_text(prefix + ".edges.tsv", detail::render([&](std::ostream& s) { write_edge_list(sim.graph, s); }));
    detail::write_text(prefix + ".graphml", detail::render([&](std::ostream& s) {
                         write_graphml(sim.graph, s, &cfg.schema, sim.profiles);
                       }));
    detail::write_text(prefix + ".profiles.csv", detail::render([&](std::ostream& s) {
                         write_profiles(cfg.schema, sim.profiles, s);
                       }));
    detail::write_text(prefix + ".metrics.json", detail::render([&](std::ostream& s) { write_report(report, s); }));
    auto trace = trace_summary(sim.trace, cfg.params, cfg.seed_defaulted);
    trace["generation_seconds"] = sim.generation_seconds;
    detail::write_text(prefix + ".trace.json", trace.dump(2) + "\n");
    detail::write_text(prefix + ".degrees.tsv",
                       detail::render([&](std::ostream& s) { write_degree_histogram(sim.graph, s); }));

    out << "generated " << sim.graph.node_count() << " nodes, " << sim.graph.edge_count() << " edges in "
        << std::fixed << std::setprecision(3) << sim.generation_seconds << " s -> " << prefix << ".*\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

struct AnalyzeOptions {
  fs::path edges;
  std::optional<fs::path> out_file;
  AnalysisFlags analysis;
};

inline int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = read_edge_list_file(o.edges);
    const MetricsReport report = analyze(g, o.analysis.options());
    if (!report.geodesic.mean) err << "warning: graph has no edges; mean geodesic is undefined\n";
    if (!report.powerlaw) err << "warning: " << report.powerlaw_error << '\n';
    const std::string text = detail::render([&](std::ostream& s) { write_report(report, s); });
    out << text;
    if (o.out_file) detail::write_text(*o.out_file, text);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

struct CompareOptions {
  fs::path a;
  fs::path b;
  std::optional<fs::path> out_file;
  AnalysisFlags analysis;
};

inline int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  MetricsReport reports[2];
  const fs::path* inputs[2] = {&o.a, &o.b};
  for (int k = 0; k < 2; ++k) {
    try {
      reports[k] = detail::load_analyzable(*inputs[k], o.analysis);
    } catch (const std::exception& e) {
      err << "error: input " << inputs[k]->string() << ": " << e.what() << '\n';
      return 1;
    }
  }
  try {
    const std::string text = detail::render([&](std::ostream& s) {
      write_comparison(reports[0], reports[1], s, o.a.string(), o.b.string());
    });
    out << text;
    if (o.out_file) detail::write_text(*o.out_file, text);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

struct ReplicateOptions {
  fs::path reference_edges;
  fs::path reference_attributes;
  fs::path config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_prefix;
  std::vector<std::string> settings;
  AnalysisFlags analysis;
};

/// Generates a network of the reference's size over the reference's own
/// attribute assignment, analyzes both, and emits the comparison.
inline int cmd_replicate(const ReplicateOptions& o, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = load_config(o.config);
    const Graph reference = read_edge_list_file(o.reference_edges);
    const std::vector<NodeProfile> profiles = load_profiles_file(cfg.schema, o.reference_attributes);
    if (profiles.size() != reference.node_count()) {
      throw ConfigError("attribute table has " + std::to_string(profiles.size()) + " rows but the reference has " +
                        std::to_string(reference.node_count()) + " nodes");
    }
    cfg.params.n = reference.node_count();
    if (o.seed) {
      cfg.params.seed = *o.seed;
      cfg.seed_defaulted = false;
    }
    apply_settings(cfg, o.settings);
    if (cfg.params.n != reference.node_count()) throw ConfigError("n cannot be overridden in replicate mode");
    if (cfg.seed_defaulted) err << "warning: no seed given; using default seed " << kDefaultSeed << '\n';

    const Simulation sim = simulate(cfg.schema, cfg.params, std::span<const NodeProfile>(profiles));
    const auto options = o.analysis.options();
    const MetricsReport ref_report = analyze(reference, options);
    const MetricsReport gen_report = analyze(sim.graph, options);
    const std::string text = detail::render([&](std::ostream& s) {
      write_comparison(ref_report, gen_report, s, o.reference_edges.string(), "generated");
    });
    out << text;
    const std::string prefix = o.out_prefix.value_or(cfg.output_prefix);
    if (!prefix.empty()) {
      detail::write_text(prefix + ".comparison.json", text);
      detail::write_text(prefix + ".edges.tsv",
                         detail::render([&](std::ostream& s) { write_edge_list(sim.graph, s); }));
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

struct SweepOptions {
  fs::path config;
  std::vector<std::string> vary;
  std::size_t seeds = 1;
  std::optional<fs::path> out_file;
  std::size_t jobs = 0;  ///< 0: hardware concurrency
  AnalysisFlags analysis;
};

/// One CSV row per (parameter combination, seed) in deterministic order.
/// Seeds are config seed + 0 .. seeds - 1.
inline int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig base = load_config(o.config);
    if (o.seeds == 0) throw ConfigError("--seeds must be >= 1");
    std::vector<Variation> vary;
    for (const auto& spec : o.vary) vary.push_back(parse_variation(spec));
    for (const auto& v : vary) {
      RunConfig probe = base;
      apply_setting(probe, v.name, v.values.front());
    }
    std::vector<NodeProfile> table = detail::profiles_for(base);

    struct Job {
      RunConfig cfg;
      std::vector<double> values;
    };
    std::vector<Job> jobs;
    std::vector<std::size_t> index(vary.size(), 0);
    while (true) {
      for (std::size_t s = 0; s < o.seeds; ++s) {
        Job job{base, {}};
        for (std::size_t k = 0; k < vary.size(); ++k) {
          job.values.push_back(vary[k].values[index[k]]);
          apply_setting(job.cfg, vary[k].name, vary[k].values[index[k]]);
        }
        job.cfg.params.seed = base.params.seed + s;
        normalize(job.cfg.schema);
        validate(job.cfg.params);
        jobs.push_back(std::move(job));
      }
      std::size_t k = vary.size();
      while (k > 0 && ++index[k - 1] == vary[k - 1].values.size()) index[--k] = 0;
      if (k == 0) break;
    }

    const auto run = [&](const Job& job) {
      if (job.cfg.profile_table && table.size() != job.cfg.params.n) {
        throw ConfigError("attribute table has " + std::to_string(table.size()) + " rows but n is " +
                          std::to_string(job.cfg.params.n));
      }
      const Simulation sim = job.cfg.profile_table
                                 ? simulate(job.cfg.schema, job.cfg.params, std::span<const NodeProfile>(table))
                                 : simulate(job.cfg.schema, job.cfg.params);
      const MetricsReport r = analyze(sim.graph, o.analysis.options());
      std::ostringstream row;
      row << std::setprecision(10);
      for (double v : job.values) row << format_number(v) << ',';
      const auto opt = [&](const std::optional<double>& x) {
        if (x) row << *x;
      };
      row << job.cfg.params.seed << ',' << r.node_count << ',' << r.edge_count << ',';
      opt(r.density);
      row << ',' << r.avg_local_clustering << ',' << r.global_transitivity << ',';
      opt(r.geodesic.mean);
      row << ',' << to_string(r.geodesic.method) << ',';
      if (r.powerlaw) row << r.powerlaw->alpha << ',' << r.powerlaw->x_min << ',' << r.powerlaw->ks_statistic;
      else row << ",,";
      row << ',';
      opt(r.assortativity);
      row << ',' << std::setprecision(6) << sim.generation_seconds << '\n';
      return row.str();
    };

    std::vector<std::string> rows(jobs.size());
    const std::size_t workers =
        std::max<std::size_t>(1, o.jobs != 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency()));
    for (std::size_t start = 0; start < jobs.size(); start += workers) {
      std::vector<std::future<std::string>> batch;
      const std::size_t end = std::min(jobs.size(), start + workers);
      for (std::size_t j = start; j < end; ++j) {
        batch.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, run, std::cref(jobs[j])));
      }
      for (std::size_t j = start; j < end; ++j) rows[j] = batch[j - start].get();
    }

    std::ostringstream text;
    for (const auto& v : vary) text << v.name << ',';
    text << "seed,nodes,edges,density,avg_local_clustering,global_transitivity,mean_geodesic,geodesic_method,"
            "powerlaw_alpha,powerlaw_x_min,powerlaw_ks,assortativity,generation_seconds\n";
    for (const auto& r : rows) text << r;
    out << text.str();
    if (o.out_file) detail::write_text(*o.out_file, text.str());
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace socnetgen::cli

#endif  // SOCNETGEN_TOOLS_COMMANDS_HPP_
