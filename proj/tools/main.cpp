#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "infmax/experiment.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Influence maximization toolkit: opinion-aware and "
               "opinion-oblivious diffusion, score-based and MC greedy seed "
               "selection, spread evaluation"};
  app.require_subcommand(1);

  // generate
  infmax::GenerateOptions gen;
  auto* generate = app.add_subcommand(
      "generate", "Write a fixture or random graph as .edges/.attrs files");
  generate->add_option("--kind", gen.kind,
                       "fig1 | er | tree | bipartite | setcover")
      ->required();
  generate->add_option("--out", gen.out_prefix, "Output path prefix")
      ->required();
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--n", gen.n, "Node count (er, random tree)");
  generate->add_option("--p", gen.p, "Arc probability (er)");
  generate->add_option("--depth", gen.depth, "Depth (complete tree)");
  generate->add_option("--branching", gen.branching,
                       "Branching factor (complete tree)");
  generate->add_option("--nx", gen.nx, "Source count (bipartite)");
  generate->add_option("--ny", gen.ny, "Sink count (bipartite)");
  generate->add_option("--elements", gen.elements, "Element count (setcover)");
  generate->add_option("--subsets", gen.subsets, "Subset count (setcover)");
  generate->add_option("--subset-size", gen.subset_size,
                       "Elements per subset (setcover)");

  // shared options for config-driven commands
  std::string config_path, out_prefix, seeds_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> threads_override;
  auto add_common = [&](CLI::App* cmd, bool with_seeds) {
    cmd->add_option("--config", config_path, "Experiment config (key=value)")
        ->required();
    cmd->add_option("--out", out_prefix, "Output path prefix")->required();
    cmd->add_option("--seed", seed_override, "Override master_seed");
    cmd->add_option("--threads", threads_override, "Cap worker threads");
    if (with_seeds) {
      cmd->add_option("--seeds", seeds_path, "Seed id file")->required();
    }
  };

  auto* select = app.add_subcommand(
      "select", "Select seeds and write a JSON report plus a CSV");
  add_common(select, false);
  bool dump_scores = false;
  select->add_flag("--dump-scores", dump_scores,
                   "Also write every node's score as <out>.scores.csv");
  auto* evaluate = app.add_subcommand(
      "evaluate", "Monte-Carlo spread of seed prefixes from a file");
  add_common(evaluate, true);
  auto* compare = app.add_subcommand(
      "compare", "Run several algorithms and tabulate their spreads");
  add_common(compare, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) {
      infmax::cmd_generate(gen);
      return 0;
    }
    infmax::ExperimentConfig config = infmax::load_config(config_path);
    if (seed_override) config.master_seed = *seed_override;
    if (threads_override) config.threads = *threads_override;
    if (select->parsed()) {
      infmax::cmd_select(config, out_prefix, dump_scores);
    } else if (evaluate->parsed()) {
      infmax::cmd_evaluate(config, seeds_path, out_prefix);
    } else if (compare->parsed()) {
      infmax::cmd_compare(config, out_prefix);
    }
    return 0;
  } catch (const infmax::ConfigError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
