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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void add_analysis_flags(CLI::App* app, socnetgen::cli::AnalysisFlags& flags) {
  app->add_option("--sampled-geodesics", flags.sampled_geodesics,
                  "Estimate mean geodesic from k random sources instead of the automatic choice")
      ->check(CLI::PositiveNumber);
  app->add_option("--geodesic-seed", flags.geodesic_seed, "Seed for geodesic source sampling");
  app->add_flag("--approximate-powerlaw", flags.approximate_powerlaw,
                "Use the closed-form approximate exponent estimate instead of the exact discrete MLE");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = socnetgen::cli;
  CLI::App app{"socnetgen: social network generation from demographic and structural similarity"};
  app.require_subcommand(1);

  cli::GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a network from a JSON config");
  generate->add_option("config", gen.config, "Run config (JSON)")->required()->check(CLI::ExistingFile);
  generate->add_option("--seed", gen.seed, "Override params.seed");
  generate->add_option("--out", gen.out_prefix, "Output path prefix (default: output.prefix)");
  generate->add_option("--set", gen.settings, "Override a parameter, name=value (repeatable)");
  add_analysis_flags(generate, gen.analysis);

  cli::AnalyzeOptions ana;
  auto* analyze = app.add_subcommand("analyze", "Compute the metrics report for an edge list");
  analyze->add_option("edges", ana.edges, "Edge list (u<TAB>v per line)")->required();
  analyze->add_option("--out", ana.out_file, "Also write the report to this file");
  add_analysis_flags(analyze, ana.analysis);

  cli::CompareOptions cmp;
  auto* compare = app.add_subcommand("compare", "Compare two networks (edge lists or .json reports)");
  compare->add_option("a", cmp.a, "First input")->required();
  compare->add_option("b", cmp.b, "Second input")->required();
  compare->add_option("--out", cmp.out_file, "Also write the comparison to this file");
  add_analysis_flags(compare, cmp.analysis);

  cli::ReplicateOptions rep;
  auto* replicate = app.add_subcommand(
      "replicate", "Generate a network matching a reference's size and attributes, then compare");
  replicate->add_option("reference_edges", rep.reference_edges, "Reference edge list")->required();
  replicate->add_option("reference_attributes", rep.reference_attributes, "Reference attribute table")->required();
  replicate->add_option("config", rep.config, "Run config (JSON)")->required()->check(CLI::ExistingFile);
  replicate->add_option("--seed", rep.seed, "Override params.seed");
  replicate->add_option("--out", rep.out_prefix, "Output path prefix");
  replicate->add_option("--set", rep.settings, "Override a parameter, name=value (repeatable)");
  add_analysis_flags(replicate, rep.analysis);

  cli::SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and emit one CSV row per run");
  sweep->add_option("config", sw.config, "Base run config (JSON)")->required()->check(CLI::ExistingFile);
  sweep->add_option("--vary", sw.vary, "name=v1,v2,... or name=lo:hi[:step] (repeatable; cross product)");
  sweep->add_option("--seeds", sw.seeds, "Seeds per combination")->check(CLI::PositiveNumber);
  sweep->add_option("--out", sw.out_file, "Also write the CSV to this file");
  sweep->add_option("--jobs", sw.jobs, "Parallel runs (0: one per hardware thread)");
  add_analysis_flags(sweep, sw.analysis);

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) return cli::cmd_generate(gen, std::cout, std::cerr);
  if (analyze->parsed()) return cli::cmd_analyze(ana, std::cout, std::cerr);
  if (compare->parsed()) return cli::cmd_compare(cmp, std::cout, std::cerr);
  if (replicate->parsed()) return cli::cmd_replicate(rep, std::cout, std::cerr);
  if (sweep->parsed()) return cli::cmd_sweep(sw, std::cout, std::cerr);
  return 1;
}
