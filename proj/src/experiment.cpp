#include "infmax/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "real_format.hpp"
#include "infmax/generators.hpp"
#include "infmax/graph_io.hpp"
#include "infmax/rng.hpp"
#include "infmax/scoring.hpp"

namespace infmax {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& field, const std::string& value) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected unsigned integer, got '" + value + "'");
  }
}

double parse_double(const std::string& field, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "expected real number, got '" + value + "'");
  }
}

DiffusionModel parse_model(const std::string& value) {
  if (value == "ic") return DiffusionModel::Ic;
  if (value == "wc") return DiffusionModel::Wc;
  if (value == "lt") return DiffusionModel::Lt;
  if (value == "lt_live_edge") return DiffusionModel::LtLiveEdge;
  if (value == "oi_ic") return DiffusionModel::OiIc;
  if (value == "oi_lt") return DiffusionModel::OiLt;
  throw ConfigError("model", "unknown model '" + value + "'");
}

ScoreAlgorithm parse_algorithm(const std::string& field,
                               const std::string& value) {
  if (value == "easyim") return ScoreAlgorithm::EaSyIm;
  if (value == "osim") return ScoreAlgorithm::Osim;
  if (value == "path_union") return ScoreAlgorithm::PathUnion;
  if (value == "modified_greedy") return ScoreAlgorithm::ModifiedGreedy;
  throw ConfigError(field, "unknown algorithm '" + value + "'");
}

SpreadKind parse_kind(const std::string& value) {
  if (value == "spread") return SpreadKind::Spread;
  if (value == "opinion") return SpreadKind::OpinionSpread;
  if (value == "effective") return SpreadKind::EffectiveOpinionSpread;
  throw ConfigError("kinds", "unknown spread kind '" + value + "'");
}

ParamScheme parse_scheme(const std::string& value) {
  if (value.rfind("ic_uniform", 0) == 0) {
    double p = 0.1;
    auto colon = value.find(':');
    if (colon != std::string::npos) {
      p = parse_double("schemes", value.substr(colon + 1));
    }
    return ParamScheme::ic_uniform(p);
  }
  if (value == "wc") return ParamScheme::wc();
  if (value == "lt_weights") return ParamScheme::lt_weights();
  if (value == "opinion_uniform") return ParamScheme::opinion_uniform();
  if (value == "opinion_normal") return ParamScheme::opinion_normal();
  if (value == "phi_uniform") return ParamScheme::phi_uniform();
  throw ConfigError("schemes", "unknown scheme '" + value + "'");
}


// Phase timings land in a sidecar that is excluded from the byte-for-byte
// reproducibility contract.
class TimingLog {
 public:
  explicit TimingLog(std::string path) : path_(std::move(path)) {}

  template <class Fn>
  auto time(const std::string& phase, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record(phase, start);
    } else {
      auto result = fn();
      record(phase, start);
      return result;
    }
  }

  ~TimingLog() {
    std::ofstream out(path_);
    out << "# infmax-timing-csv v1\nphase,wall_ms\n";
    for (const auto& [phase, ms] : rows_) {
      out << phase << ',' << detail::format_real(ms) << '\n';
    }
  }

 private:
  void record(const std::string& phase,
              std::chrono::steady_clock::time_point start) {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    rows_.emplace_back(phase, ms);
  }

  std::string path_;
  std::vector<std::pair<std::string, double>> rows_;
};

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config", "cannot open " + path.string());
  }

  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", path.string() + ":" +
                                      std::to_string(line_no) +
                                      ": expected key = value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }

  ExperimentConfig config;
  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string value = it->second;
    kv.erase(it);
    return value;
  };

  if (auto v = take("edges")) config.edges_path = *v;
  if (auto v = take("attrs")) config.attrs_path = *v;
  if (auto v = take("directedness")) {
    if (*v == "directed") {
      config.directedness = Directedness::Directed;
    } else if (*v == "undirected") {
      config.directedness = Directedness::Undirected;
    } else {
      throw ConfigError("directedness", "expected directed|undirected");
    }
  }
  if (auto v = take("schemes")) {
    for (const auto& item : split_list(*v)) {
      config.schemes.push_back(parse_scheme(item));
    }
  }
  if (auto v = take("model")) config.spec.model = parse_model(*v);
  if (auto v = take("lambda")) {
    config.spec.lambda = parse_double("lambda", *v);
    if (config.spec.lambda < 0.0) {
      throw ConfigError("lambda", "must be non-negative");
    }
  }
  if (auto v = take("algorithm")) {
    config.algorithm = parse_algorithm("algorithm", *v);
  }
  if (auto v = take("algorithms")) {
    for (const auto& item : split_list(*v)) {
      config.algorithms.push_back(parse_algorithm("algorithms", item));
    }
  }
  if (auto v = take("k")) {
    for (const auto& item : split_list(*v)) {
      config.k_list.push_back(
          static_cast<NodeId>(parse_u64("k", item)));
    }
  }
  if (auto v = take("l")) {
    config.l = static_cast<int>(parse_u64("l", *v));
    if (config.l < 1) throw ConfigError("l", "must be >= 1");
  }
  if (auto v = take("replicas")) config.replicas = parse_u64("replicas", *v);
  if (auto v = take("greedy_replicas")) {
    config.greedy_replicas = parse_u64("greedy_replicas", *v);
  }
  if (auto v = take("master_seed")) {
    config.master_seed = parse_u64("master_seed", *v);
  }
  if (auto v = take("discount")) {
    if (*v == "seeds_only") {
      config.discount.mode = DiscountMode::SeedsOnly;
    } else if (*v == "mc_threshold") {
      config.discount.mode = DiscountMode::McThreshold;
    } else {
      throw ConfigError("discount", "expected seeds_only|mc_threshold");
    }
  }
  if (auto v = take("tau")) config.discount.tau = parse_double("tau", *v);
  if (auto v = take("discount_replicas")) {
    config.discount.replicas = parse_u64("discount_replicas", *v);
  }
  if (auto v = take("kinds")) {
    for (const auto& item : split_list(*v)) {
      config.kinds.push_back(parse_kind(item));
    }
  }
  if (auto v = take("threads")) {
    config.threads = static_cast<int>(parse_u64("threads", *v));
  }

  if (!kv.empty()) {
    throw ConfigError(kv.begin()->first, "unknown config key");
  }
  if (config.kinds.empty()) {
    if (is_opinion_aware(config.spec.model)) {
      config.kinds = {SpreadKind::Spread, SpreadKind::OpinionSpread,
                      SpreadKind::EffectiveOpinionSpread};
    } else {
      config.kinds = {SpreadKind::Spread};
    }
  }
  return config;
}

Graph prepare_graph(const ExperimentConfig& config) {
  if (config.edges_path.empty()) {
    throw ConfigError("edges", "no edge-list path configured");
  }
  if (!std::filesystem::exists(config.edges_path)) {
    throw ConfigError("edges", "file does not exist: " + config.edges_path);
  }
  if (!config.attrs_path.empty() &&
      !std::filesystem::exists(config.attrs_path)) {
    throw ConfigError("attrs", "file does not exist: " + config.attrs_path);
  }

  LoadResult loaded =
      load_edge_list_full(config.edges_path, config.directedness);
  if (loaded.duplicate_arcs_dropped > 0) {
    std::fprintf(stderr, "warning: dropped %zu duplicate arc(s) from %s\n",
                 loaded.duplicate_arcs_dropped, config.edges_path.c_str());
  }
  Graph g = std::move(loaded.graph);
  if (!config.attrs_path.empty()) {
    load_node_attrs(g, config.attrs_path);
  }

  if (!config.schemes.empty() && !config.master_seed) {
    throw ConfigError("master_seed",
                      "random parameter schemes require a master seed");
  }
  for (std::size_t i = 0; i < config.schemes.size(); ++i) {
    g = assign_parameters(g, config.schemes[i],
                          derive_stream(config.master_seed.value_or(0), i));
  }
  return g;
}

namespace {

std::uint64_t require_seed(const ExperimentConfig& config) {
  if (!config.master_seed) {
    throw ConfigError("master_seed",
                      "required (set it in the config or pass --seed)");
  }
  return *config.master_seed;
}

void require_k_list(const ExperimentConfig& config, NodeId n) {
  if (config.k_list.empty()) {
    throw ConfigError("k", "at least one seed count is required");
  }
  for (NodeId k : config.k_list) {
    if (k < 1 || k > n) {
      throw ConfigError("k", "k=" + std::to_string(k) +
                                 " outside [1, n=" + std::to_string(n) + "]");
    }
  }
}

SeedSelectionReport run_selection(const ExperimentConfig& config,
                                  const Graph& g, NodeId k,
                                  ScoreAlgorithm algorithm,
                                  std::uint64_t seed) {
  if (algorithm == ScoreAlgorithm::ModifiedGreedy) {
    const SpreadKind kind = is_opinion_aware(config.spec.model)
                                ? SpreadKind::EffectiveOpinionSpread
                                : SpreadKind::Spread;
    return modified_greedy(g, k, config.spec, kind, config.greedy_replicas,
                           seed, /*exact_when_eligible=*/true,
                           config.threads > 0 ? config.threads : 1);
  }
  const ScoreMode mode = algorithm == ScoreAlgorithm::Osim
                             ? ScoreMode::OpinionAware
                             : ScoreMode::OpinionOblivious;
  return seed_select(g, k, config.l, mode, config.spec, config.discount, seed,
                     algorithm);
}

nlohmann::json report_to_json(const SeedSelectionReport& report,
                              const Graph& g) {
  nlohmann::json j;
  j["algorithm"] = score_algorithm_name(report.algorithm);
  j["model"] = model_name(report.spec.model);
  j["lambda"] = report.spec.lambda;
  j["l"] = report.l;
  j["master_seed"] = report.master_seed;
  j["seeds"] = nlohmann::json::array();
  for (NodeId s : report.seeds) j["seeds"].push_back(g.original_id(s));
  j["iterations"] = nlohmann::json::array();
  for (const auto& it : report.per_iteration) {
    nlohmann::json discounted = nlohmann::json::array();
    for (NodeId v : it.newly_discounted) discounted.push_back(g.original_id(v));
    j["iterations"].push_back({{"node", g.original_id(it.chosen)},
                               {"score", it.score},
                               {"activated_after", it.activated_count_after},
                               {"newly_discounted", discounted}});
  }
  return j;
}

std::vector<NodeId> load_seeds_file(const Graph& g,
                                    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("seeds", "cannot open " + path.string());
  }
  std::map<std::int64_t, NodeId> to_dense;
  for (NodeId v = 0; v < g.node_count(); ++v) to_dense[g.original_id(v)] = v;

  std::vector<NodeId> seeds;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::stringstream ss(line);
    std::int64_t id;
    while (ss >> id) {
      auto it = to_dense.find(id);
      if (it == to_dense.end()) {
        throw ConfigError("seeds", "unknown node id " + std::to_string(id));
      }
      seeds.push_back(it->second);
    }
  }
  if (seeds.empty()) {
    throw ConfigError("seeds", "seed file is empty: " + path.string());
  }
  return seeds;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace

void cmd_generate(const GenerateOptions& options) {
  if (options.out_prefix.empty()) {
    throw ConfigError("out", "output prefix is required");
  }
  Graph g;
  if (options.kind == "fig1") {
    g = make_fig1();
  } else if (options.kind == "er") {
    if (options.n == 0) throw ConfigError("n", "er needs --n > 0");
    g = make_directed_er(options.n, options.p, options.seed);
  } else if (options.kind == "tree") {
    if (options.n > 0) {
      g = make_random_out_tree(options.n, options.seed);
    } else if (options.depth >= 0) {
      g = make_complete_tree(options.depth, options.branching);
    } else {
      throw ConfigError("tree", "needs --n (random) or --depth (complete)");
    }
  } else if (options.kind == "bipartite") {
    if (options.nx < 2) throw ConfigError("nx", "bipartite needs --nx >= 2");
    NodeId ny = options.ny == 0 ? 2 * options.nx : options.ny;
    if (ny != 2 * options.nx) {
      throw ConfigError(
          "ny", "edge-list output supports exactly 2*nx sinks (isolated "
                "sinks are not representable)");
    }
    g = make_bipartite_counterexample(options.nx, ny).graph;
  } else if (options.kind == "setcover") {
    if (options.elements == 0 || options.subsets == 0 ||
        options.subset_size == 0) {
      throw ConfigError("setcover",
                        "needs --elements, --subsets and --subset-size");
    }
    g = make_random_setcover_reduction(options.elements, options.subsets,
                                       options.subset_size, options.seed)
            .graph;
  } else {
    throw ConfigError("kind", "unknown generator kind '" + options.kind + "'");
  }

  write_edge_list(g, options.out_prefix + ".edges");
  write_node_attrs(g, options.out_prefix + ".attrs");
}

void cmd_select(const ExperimentConfig& config, const std::string& out_prefix,
                bool dump_scores) {
  const std::uint64_t seed = require_seed(config);
  if (dump_scores && config.algorithm == ScoreAlgorithm::ModifiedGreedy) {
    throw ConfigError("algorithm",
                      "modified_greedy assigns no scores to dump");
  }
  TimingLog timing(out_prefix + ".timing.csv");

  Graph g = timing.time("load", [&] { return prepare_graph(config); });
  require_k_list(config, g.node_count());
  const NodeId k_max =
      *std::max_element(config.k_list.begin(), config.k_list.end());

  SeedSelectionReport report = timing.time("select", [&] {
    return run_selection(config, g, k_max, config.algorithm, seed);
  });

  if (dump_scores) {
    const EdgeWeighting weighting = is_lt_family(config.spec.model)
                                        ? EdgeWeighting::LtWeight
                                        : EdgeWeighting::InfluenceProbability;
    GraphView view(g);
    ScoreVector scores = timing.time("dump_scores", [&] {
      switch (config.algorithm) {
        case ScoreAlgorithm::Osim:
          return osim_scores(view, config.l, weighting);
        case ScoreAlgorithm::PathUnion:
          return path_union_scores(view, config.l, weighting);
        default:
          return easyim_scores(view, config.l, weighting);
      }
    });
    std::ostringstream csv;
    csv << "# infmax-scores-csv v1\nnode,score\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
      csv << g.original_id(v) << ',' << detail::format_real(scores.at(v)) << '\n';
    }
    write_text(out_prefix + ".scores.csv", csv.str());
  }

  std::ostringstream csv;
  csv << "# infmax-select-csv v1\nk,seed,score\n";
  for (std::size_t i = 0; i < report.seeds.size(); ++i) {
    csv << (i + 1) << ',' << g.original_id(report.seeds[i]) << ','
        << detail::format_real(report.per_iteration[i].score) << '\n';
  }
  write_text(out_prefix + ".select.csv", csv.str());
  write_text(out_prefix + ".select.json",
             report_to_json(report, g).dump(2) + "\n");
}

void cmd_evaluate(const ExperimentConfig& config,
                  const std::filesystem::path& seeds_path,
                  const std::string& out_prefix) {
  const std::uint64_t seed = require_seed(config);
  TimingLog timing(out_prefix + ".timing.csv");

  Graph g = timing.time("load", [&] { return prepare_graph(config); });
  const std::vector<NodeId> seeds = load_seeds_file(g, seeds_path);

  std::vector<NodeId> k_list = config.k_list;
  if (k_list.empty()) k_list.push_back(static_cast<NodeId>(seeds.size()));
  for (NodeId k : k_list) {
    if (k < 1 || k > seeds.size()) {
      throw ConfigError("k", "k=" + std::to_string(k) +
                                 " exceeds the seed file (" +
                                 std::to_string(seeds.size()) + " seeds)");
    }
  }

  std::ostringstream csv;
  csv << "# infmax-evaluate-csv v1\nk,kind,mean,std_error,replicas\n";
  for (NodeId k : k_list) {
    std::span<const NodeId> prefix(seeds.data(), k);
    for (std::size_t ki = 0; ki < config.kinds.size(); ++ki) {
      const SpreadKind kind = config.kinds[ki];
      const std::string phase = "evaluate:k=" + std::to_string(k) +
                                ":" + spread_kind_name(kind);
      SpreadEstimate est = timing.time(phase, [&] {
        return mc_estimate(g, prefix, config.spec, kind, config.replicas,
                           derive_stream(seed, k, ki),
                           config.threads > 0 ? config.threads : 1);
      });
      csv << k << ',' << spread_kind_name(kind) << ','
          << detail::format_real(est.mean) << ',' << detail::format_real(est.std_error) << ','
          << est.replicas << '\n';
    }
  }
  write_text(out_prefix + ".evaluate.csv", csv.str());
}

void cmd_compare(const ExperimentConfig& config,
                 const std::string& out_prefix) {
  const std::uint64_t seed = require_seed(config);
  if (config.algorithms.empty()) {
    throw ConfigError("algorithms", "compare needs a list of algorithms");
  }
  TimingLog timing(out_prefix + ".timing.csv");

  Graph g = timing.time("load", [&] { return prepare_graph(config); });
  require_k_list(config, g.node_count());
  const NodeId k_max =
      *std::max_element(config.k_list.begin(), config.k_list.end());

  std::ostringstream csv;
  csv << "# infmax-compare-csv v1\nalgorithm,k,kind,mean,std_error,replicas\n";
  for (ScoreAlgorithm algorithm : config.algorithms) {
    const std::string name = score_algorithm_name(algorithm);
    SeedSelectionReport report = timing.time("select:" + name, [&] {
      return run_selection(config, g, k_max, algorithm, seed);
    });
    for (NodeId k : config.k_list) {
      std::span<const NodeId> prefix(report.seeds.data(), k);
      for (std::size_t ki = 0; ki < config.kinds.size(); ++ki) {
        const SpreadKind kind = config.kinds[ki];
        SpreadEstimate est = timing.time(
            "evaluate:" + name + ":k=" + std::to_string(k), [&] {
              return mc_estimate(g, prefix, config.spec, kind, config.replicas,
                                 derive_stream(seed, k, ki),
                                 config.threads > 0 ? config.threads : 1);
            });
        csv << name << ',' << k << ',' << spread_kind_name(kind) << ','
            << detail::format_real(est.mean) << ',' << detail::format_real(est.std_error)
            << ',' << est.replicas << '\n';
      }
    }
  }
  write_text(out_prefix + ".compare.csv", csv.str());
}

}  // namespace infmax
