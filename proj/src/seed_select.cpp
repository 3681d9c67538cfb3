#include "infmax/seed_select.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "cascade_engine.hpp"

namespace infmax {

const char* score_algorithm_name(ScoreAlgorithm a) {
  switch (a) {
    case ScoreAlgorithm::EaSyIm: return "easyim";
    case ScoreAlgorithm::Osim: return "osim";
    case ScoreAlgorithm::PathUnion: return "path_union";
    case ScoreAlgorithm::ModifiedGreedy: return "modified_greedy";
  }
  return "?";
}

namespace {

void validate_k(const Graph& g, NodeId k) {
  if (g.node_count() == 0) {
    throw std::invalid_argument("cannot select seeds from an empty graph");
  }
  if (k < 1 || k > g.node_count()) {
    throw std::invalid_argument("k must be in [1, n]");
  }
}

// Nodes whose empirical activation frequency under cascades from `seeds`
// reaches tau. Seeds are always included (they activate with frequency 1).
std::vector<NodeId> frequently_activated(const Graph& g,
                                         std::span<const NodeId> seeds,
                                         const DiffusionSpec& spec,
                                         const DiscountPolicy& policy,
                                         std::uint64_t stream_seed) {
  std::vector<std::uint32_t> hits(g.node_count(), 0);
  detail::CascadeState state;
  for (std::uint64_t r = 0; r < policy.replicas; ++r) {
    detail::HashChoices choices(derive_stream(stream_seed, r));
    detail::run_cascade_into(g, seeds, spec, choices, state);
    for (NodeId v : state.activated_order) ++hits[v];
  }
  std::vector<NodeId> out;
  const double needed = policy.tau * static_cast<double>(policy.replicas);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (static_cast<double>(hits[v]) >= needed) out.push_back(v);
  }
  return out;
}

}  // namespace

SeedSelectionReport seed_select(const Graph& g, NodeId k, int l,
                                ScoreMode mode, const DiffusionSpec& spec,
                                const DiscountPolicy& policy,
                                std::uint64_t master_seed,
                                ScoreAlgorithm algorithm) {
  validate_k(g, k);
  if (algorithm == ScoreAlgorithm::ModifiedGreedy) {
    throw std::invalid_argument(
        "modified_greedy has its own entry point; pick a scoring algorithm");
  }
  if (algorithm == ScoreAlgorithm::Osim && mode != ScoreMode::OpinionAware) {
    throw std::invalid_argument("osim scoring requires the opinion-aware mode");
  }
  if (policy.mode == DiscountMode::McThreshold) {
    if (!(policy.tau > 0.0 && policy.tau <= 1.0)) {
      throw std::invalid_argument("tau must be in (0, 1]");
    }
    if (policy.replicas < 1) {
      throw std::invalid_argument("discount replicas must be >= 1");
    }
  }

  // l is capped by the longest shortest path we can certify.
  const int diam = diameter_estimate(
      g, std::min<std::size_t>(g.node_count(), 256),
      derive_stream(master_seed, 0x9d));
  const int effective_l = std::max(1, std::min(l, std::max(diam, 1)));

  const EdgeWeighting weighting = is_lt_family(spec.model)
                                      ? EdgeWeighting::LtWeight
                                      : EdgeWeighting::InfluenceProbability;

  SeedSelectionReport report;
  report.algorithm = algorithm;
  report.spec = spec;
  report.l = effective_l;
  report.master_seed = master_seed;

  NodeMask activated(g.node_count());
  for (NodeId iter = 0; iter < k; ++iter) {
    if (g.node_count() - activated.excluded_count() == 0) {
      throw std::invalid_argument(
          "no live nodes left to select (k too large for discount policy)");
    }
    GraphView view(g, activated);
    ScoreVector scores;
    switch (algorithm) {
      case ScoreAlgorithm::EaSyIm:
        scores = easyim_scores(view, effective_l, weighting);
        break;
      case ScoreAlgorithm::Osim:
        scores = osim_scores(view, effective_l, weighting);
        break;
      case ScoreAlgorithm::PathUnion:
        scores = path_union_scores(view, effective_l, weighting);
        break;
      case ScoreAlgorithm::ModifiedGreedy:
        break;  // unreachable
    }
    const NodeId chosen = *scores.argmax_live();

    report.seeds.push_back(chosen);
    std::vector<NodeId> newly;
    if (policy.mode == DiscountMode::SeedsOnly) {
      activated.exclude(chosen);
      newly.push_back(chosen);
    } else {
      for (NodeId v : frequently_activated(g, report.seeds, spec, policy,
                                           derive_stream(master_seed, iter))) {
        if (!activated.is_excluded(v)) newly.push_back(v);
        activated.exclude(v);
      }
    }
    report.per_iteration.push_back({chosen, scores.at(chosen),
                                    activated.excluded_count(),
                                    std::move(newly)});
  }
  return report;
}

SeedSelectionReport seed_select(const Graph& g, NodeId k, int l,
                                ScoreMode mode, const DiffusionSpec& spec,
                                const DiscountPolicy& policy,
                                std::uint64_t master_seed) {
  return seed_select(g, k, l, mode, spec, policy, master_seed,
                     mode == ScoreMode::OpinionAware ? ScoreAlgorithm::Osim
                                                     : ScoreAlgorithm::EaSyIm);
}

SeedSelectionReport modified_greedy(const Graph& g, NodeId k,
                                    const DiffusionSpec& spec, SpreadKind kind,
                                    std::uint64_t replicas,
                                    std::uint64_t master_seed,
                                    bool exact_when_eligible, int threads) {
  validate_k(g, k);
  if (replicas < 1) {
    throw std::invalid_argument("replicas must be >= 1");
  }

  // Use the oracle only when it is affordable for every candidate set; this
  // keeps all gains within one run comparable.
  bool use_exact = false;
  if (exact_when_eligible) {
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
    use_exact = exact_choice_bits(g, all, spec) <= 24.0;
  }

  SeedSelectionReport report;
  report.algorithm = ScoreAlgorithm::ModifiedGreedy;
  report.spec = spec;
  report.master_seed = master_seed;

  std::vector<NodeId> seeds;
  double current_value = 0.0;
  for (NodeId iter = 0; iter < k; ++iter) {
    std::vector<double> value(g.node_count(),
                              -std::numeric_limits<double>::infinity());
    std::vector<NodeId> candidates;
    for (NodeId w = 0; w < g.node_count(); ++w) {
      if (std::find(seeds.begin(), seeds.end(), w) == seeds.end()) {
        candidates.push_back(w);
      }
    }

    auto evaluate = [&](NodeId w) {
      std::vector<NodeId> trial(seeds);
      trial.push_back(w);
      if (use_exact) {
        value[w] = exact_spread(g, trial, spec, kind);
      } else {
        value[w] = mc_estimate(g, trial, spec, kind, replicas,
                               derive_stream(master_seed, iter, w), 1)
                       .mean;
      }
    };

    const unsigned worker_count = std::max(
        1, std::min<int>(threads, static_cast<int>(candidates.size())));
    if (worker_count <= 1) {
      for (NodeId w : candidates) evaluate(w);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < worker_count; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < candidates.size(); i += worker_count) {
            evaluate(candidates[i]);
          }
        });
      }
      for (auto& th : pool) th.join();
    }

    NodeId best = candidates.front();
    for (NodeId w : candidates) {
      if (value[w] > value[best]) best = w;
    }

    seeds.push_back(best);
    report.seeds.push_back(best);
    report.per_iteration.push_back({best, value[best] - current_value,
                                    static_cast<NodeId>(seeds.size()),
                                    {best}});
    current_value = value[best];
  }
  return report;
}

}  // namespace infmax
