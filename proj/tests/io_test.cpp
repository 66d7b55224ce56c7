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


#include "socnetgen/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "oracles.hpp"

namespace socnetgen {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("socnetgen_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

constexpr const char* kReedConfig = R"({
  "schema": {"attributes": [
    {"name": "gender", "kind": "categorical", "levels": ["f", "m"]},
    {"name": "year", "kind": "ordinal", "levels": [2007, 2008, 2009], "proportions": [1, 2, 1]}
  ]},
  "params": {"n": 962, "m_min": 1, "m_max": 40, "p_sim": 1, "p_triad": 1, "triad_count": 3, "seed": 5}
})";

TEST(EdgeList, CanonicalOutput) {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  std::ostringstream out;
  write_edge_list(g, out);
  EXPECT_EQ(out.str(), "0\t1\n0\t2\n1\t3\n");
}

TEST(EdgeList, ReadSkipsCommentsAndMergesDuplicates) {
  std::istringstream in("# header\n0 1\n\n1\t0\n  2 3\r\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 2u);
  std::istringstream padded("0 1\n");
  EXPECT_EQ(read_edge_list(padded, 10).node_count(), 10u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("0 1\n# c\n2 2\n"), 3u);
  EXPECT_EQ(line_of("0 1\n1\n"), 2u);
  EXPECT_EQ(line_of("0 x\n"), 1u);
  EXPECT_EQ(line_of("0 1 2\n"), 1u);
  EXPECT_EQ(line_of("-1 2\n"), 1u);
}

TEST(EdgeList, RoundTrip) {
  const auto sim = simulate(fixtures::student_schema(), GenParams{200, 1, 6, 1, 1, 2, 3});
  std::stringstream buffer;
  write_edge_list(sim.graph, buffer);
  EXPECT_EQ(read_edge_list(buffer), sim.graph);
}

TEST(Tables, ReadAndDelimiters) {
  std::istringstream in("a, b\n\"x\",y\n\n1,2\n");
  const auto t = read_table(in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "x");
  EXPECT_EQ(t.lines[1], 4u);
  EXPECT_EQ(delimiter_for("a.tsv"), '\t');
  EXPECT_EQ(delimiter_for("a.csv"), ',');
  std::istringstream ragged("a,b\n1\n");
  EXPECT_THROW(read_table(ragged), FormatError);
}

TEST(Tables, ProfilesRoundTrip) {
  const auto s = fixtures::student_schema();
  Rng rng(4);
  const auto profiles = sample_profiles(s, 30, rng);
  std::stringstream buffer;
  write_profiles(s, profiles, buffer);
  EXPECT_EQ(load_profiles(s, read_table(buffer)), profiles);
}

TEST(GraphMl, ContainsNodesEdgesAndAttributes) {
  AttributeSchema s;
  s.attributes.push_back(make_categorical("club", {"a&b", "c"}, {1, 1}));
  normalize(s);
  Graph g(3);
  g.add_edge(0, 2);
  const std::vector<NodeProfile> profiles{{{0}}, {{1}}, {{1}}};
  std::ostringstream out;
  write_graphml(g, out, &s, profiles);
  const auto doc = out.str();
  EXPECT_NE(doc.find("attr.name=\"club\""), std::string::npos);
  EXPECT_NE(doc.find("<data key=\"d0\">a&amp;b</data>"), std::string::npos);
  EXPECT_NE(doc.find("<edge source=\"n0\" target=\"n2\"/>"), std::string::npos);
  EXPECT_NE(doc.find("<node id=\"n1\">"), std::string::npos);
  std::ostringstream bare;
  write_graphml(g, bare);
  EXPECT_NE(bare.str().find("<node id=\"n1\"/>"), std::string::npos);
}

TEST(Config, ParsesParamsAndSchema) {
  const auto cfg = parse_config(kReedConfig);
  EXPECT_EQ(cfg.params.n, 962u);
  EXPECT_EQ(cfg.params.m_min, 1u);
  EXPECT_EQ(cfg.params.m_max, 40u);
  EXPECT_EQ(cfg.params.triad_count, 3u);
  EXPECT_EQ(cfg.params.seed, 5u);
  EXPECT_FALSE(cfg.seed_defaulted);
  ASSERT_EQ(cfg.schema.attributes.size(), 2u);
  EXPECT_EQ(cfg.schema.attributes[1].labels[0], "2007");
  EXPECT_DOUBLE_EQ(cfg.schema.attributes[1].proportions[1], 0.5);
  EXPECT_DOUBLE_EQ(cfg.schema.attributes[1].rho, 2.0);
}

TEST(Config, RejectsInvalidInput) {
  EXPECT_THROW(parse_config(R"({"params": {"n": 10, "m_min": 0}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"params": {"n": 10, "m_max": 10}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"params": {}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"schema": {}})"), ConfigError);
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"params": {"n": 10, "p_sim": 2}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"params": {"n": 10, "m_min": -1}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"params": {"n": 10}, "profiles": {"source": "table"}})"), ConfigError);
}

TEST(Config, UnknownKeysAreListed) {
  try {
    parse_config(R"({"params": {"n": 10, "p_simm": 1, "bogus": 2}})");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("p_simm"), std::string::npos);
    EXPECT_NE(what.find("bogus"), std::string::npos);
  }
}

TEST(Config, SeedDefault) {
  const auto cfg = parse_config(R"({"params": {"n": 10}})");
  EXPECT_TRUE(cfg.seed_defaulted);
  EXPECT_EQ(cfg.params.seed, kDefaultSeed);
}

TEST(Config, SerializationIsCanonical) {
  const auto cfg = parse_config(kReedConfig);
  const auto text = serialize_config(cfg);
  const auto again = parse_config(text);
  EXPECT_EQ(serialize_config(again), text);
  EXPECT_EQ(again.params, cfg.params);
}

TEST(Config, ShippedConfigsLoad) {
  for (const auto* name : {"caltech", "reed", "simmons", "middlebury", "american"}) {
    const auto cfg = load_config(fs::path(SOCNETGEN_SOURCE_DIR) / "configs" / (std::string(name) + ".json"));
    EXPECT_EQ(cfg.schema.attributes.size(), 4u) << name;
    EXPECT_FALSE(cfg.seed_defaulted) << name;
  }
}

TEST(Config, TablePathResolvedAgainstConfig) {
  const auto dir = scratch_dir("table");
  std::ofstream(dir / "cfg.json") << R"({"params": {"n": 10}, "profiles": {"source": "table", "path": "p.csv"}})";
  EXPECT_THROW(load_config(dir / "cfg.json"), ConfigError);
  std::ofstream(dir / "p.csv") << "x\n";
  const auto cfg = load_config(dir / "cfg.json");
  EXPECT_EQ(fs::path(*cfg.profile_table), dir / "p.csv");
}

TEST(Reports, RoundTripWithNulls) {
  Graph cycle(4);
  for (NodeId v = 0; v < 4; ++v) cycle.add_edge(v, (v + 1) % 4);
  const auto r = analyze(cycle);
  ASSERT_FALSE(r.assortativity);
  std::ostringstream out;
  write_report(r, out);
  const auto text = out.str();
  EXPECT_NE(text.find("\"assortativity\": null"), std::string::npos);
  const auto back = read_report(text);
  EXPECT_FALSE(back.assortativity);
  EXPECT_EQ(back.edge_count, 4u);
  EXPECT_EQ(back.geodesic.mean, r.geodesic.mean);
  EXPECT_THROW(read_report("[1]"), FormatError);
}

TEST(Reports, FullRoundTrip) {
  const auto sim = simulate(fixtures::student_schema(), GenParams{300, 1, 10, 1, 1, 3, 8});
  const auto r = analyze(sim.graph);
  std::ostringstream out;
  write_report(r, out);
  const auto back = read_report(out.str());
  std::ostringstream again;
  write_report(back, again);
  EXPECT_EQ(again.str(), out.str());
}

TEST(Comparison, Deltas) {
  const auto d = compare_metric("density", 0.1, 0.12);
  EXPECT_NEAR(*d.delta, 0.02, 1e-15);
  EXPECT_NEAR(*d.relative_delta, 0.2, 1e-12);
  EXPECT_FALSE(compare_metric("x", 0.0, 1.0).relative_delta);
  EXPECT_EQ(*compare_metric("x", 0.0, 0.0).relative_delta, 0.0);
  EXPECT_FALSE(compare_metric("x", std::nullopt, 1.0).delta);
  EXPECT_NEAR(*compare_metric("x", -0.5, -0.25).relative_delta, 0.5, 1e-15);
}

TEST(Comparison, DocumentListsMetrics) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const auto r = analyze(g);
  std::ostringstream out;
  write_comparison(r, r, out, "ref", "gen");
  const auto doc = ordered_json::parse(out.str());
  EXPECT_EQ(doc["a"], "ref");
  for (const auto* key : {"density", "avg_local_clustering", "global_transitivity", "mean_geodesic",
                          "powerlaw_alpha", "assortativity"}) {
    EXPECT_TRUE(doc["metrics"].contains(key)) << key;
  }
  EXPECT_TRUE(doc["metrics"]["powerlaw_alpha"]["delta"].is_null());
}

TEST(Trace, SummaryTotals) {
  const GenParams p{100, 1, 5, 1, 1, 2, 3};
  const auto sim = simulate(fixtures::student_schema(), p);
  const auto j = trace_summary(sim.trace, p, false);
  EXPECT_EQ(j["total_edges"].get<std::size_t>(), sim.graph.edge_count());
  EXPECT_EQ(j["similarity_edges"].get<std::size_t>() + j["random_edges"].get<std::size_t>() +
                j["triad_edges"].get<std::size_t>() + j["triad_random_edges"].get<std::size_t>() + 3,
            sim.graph.edge_count());
}

}  // namespace
}  // namespace socnetgen
