#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "infmax/diffusion.hpp"
#include "infmax/graph.hpp"
#include "infmax/graph_io.hpp"
#include "infmax/params.hpp"
#include "infmax/seed_select.hpp"
#include "infmax/spread.hpp"

namespace infmax {

/// Configuration or input validation failure; the CLI maps it to exit
/// code 2. `field` names the offending config key or flag.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Flat key=value experiment description; lists are comma-separated and
/// '#' starts a comment.
struct ExperimentConfig {
  std::string edges_path;
  std::string attrs_path;           // optional
  Directedness directedness = Directedness::Directed;
  std::vector<ParamScheme> schemes; // applied in order
  DiffusionSpec spec;
  ScoreAlgorithm algorithm = ScoreAlgorithm::EaSyIm;
  std::vector<ScoreAlgorithm> algorithms;  // compare only
  std::vector<NodeId> k_list;
  int l = 3;
  std::uint64_t replicas = 10000;
  std::uint64_t greedy_replicas = 100;
  std::optional<std::uint64_t> master_seed;
  DiscountPolicy discount;
  std::vector<SpreadKind> kinds;
  int threads = 0;  // 0 = hardware concurrency
};

ExperimentConfig load_config(const std::filesystem::path& path);

/// Loads the configured graph and applies the parameter schemes. Scheme i
/// draws from a stream derived from (master_seed, i).
Graph prepare_graph(const ExperimentConfig& config);

struct GenerateOptions {
  std::string kind;  // fig1 | er | tree | bipartite | setcover
  std::string out_prefix;
  std::uint64_t seed = 0;
  NodeId n = 0;
  double p = 0.1;
  int depth = -1;
  int branching = 2;
  NodeId nx = 0, ny = 0;
  NodeId elements = 0, subsets = 0, subset_size = 0;
};

/// Emits <out>.edges and <out>.attrs for the requested fixture or random
/// graph. Deterministic for a given seed.
void cmd_generate(const GenerateOptions& options);

/// Runs seed selection and writes <out>.select.json, <out>.select.csv and
/// the timing sidecar <out>.timing.csv. With dump_scores set, also writes
/// <out>.scores.csv holding the unmasked score of every node (scoring
/// algorithms only).
void cmd_select(const ExperimentConfig& config, const std::string& out_prefix,
                bool dump_scores = false);

/// Evaluates seed prefixes from a seeds file (original ids, one or more per
/// line) and writes <out>.evaluate.csv plus the timing sidecar.
void cmd_evaluate(const ExperimentConfig& config,
                  const std::filesystem::path& seeds_path,
                  const std::string& out_prefix);

/// Runs every configured algorithm end to end (selection then evaluation)
/// and writes <out>.compare.csv plus the timing sidecar.
void cmd_compare(const ExperimentConfig& config,
                 const std::string& out_prefix);

}  // namespace infmax
