#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infmax/diffusion.hpp"
#include "infmax/graph.hpp"
#include "infmax/scoring.hpp"
#include "infmax/spread.hpp"

namespace infmax {

/// How the activated set V_a grows after each selected seed. SeedsOnly adds
/// just the seed; McThreshold runs `replicas` cascades from the current
/// seed set and additionally excludes every node whose empirical activation
/// frequency reaches tau.
enum class DiscountMode { SeedsOnly, McThreshold };

struct DiscountPolicy {
  DiscountMode mode = DiscountMode::McThreshold;
  double tau = 0.5;
  std::uint64_t replicas = 100;
};

enum class ScoreAlgorithm { EaSyIm, Osim, PathUnion, ModifiedGreedy };

const char* score_algorithm_name(ScoreAlgorithm a);

struct IterationRecord {
  NodeId chosen = 0;
  double score = 0.0;              // score or marginal gain at selection time
  NodeId activated_count_after = 0;  // |V_a| after the discount update
  std::vector<NodeId> newly_discounted;  // nodes added to V_a this round
};

struct SeedSelectionReport {
  std::vector<NodeId> seeds;
  std::vector<IterationRecord> per_iteration;
  // Config echo.
  ScoreAlgorithm algorithm = ScoreAlgorithm::EaSyIm;
  DiffusionSpec spec;
  int l = 0;
  std::uint64_t master_seed = 0;
};

/// Greedy selection driven by score assignment: k rounds of scoring the
/// view with V_a masked out, picking the argmax (ties to the lowest id),
/// and updating V_a per the policy. The effective l is clamped to a
/// diameter estimate of the graph. PathUnion is accepted as an oblivious
/// scoring backend besides EaSyIm/Osim.
///
/// Throws std::invalid_argument when k < 1, k exceeds the number of nodes,
/// or the graph is empty.
SeedSelectionReport seed_select(const Graph& g, NodeId k, int l,
                                ScoreMode mode, const DiffusionSpec& spec,
                                const DiscountPolicy& policy,
                                std::uint64_t master_seed,
                                ScoreAlgorithm algorithm);

/// Convenience overload: algorithm follows the mode (EaSyIm or Osim).
SeedSelectionReport seed_select(const Graph& g, NodeId k, int l,
                                ScoreMode mode, const DiffusionSpec& spec,
                                const DiscountPolicy& policy,
                                std::uint64_t master_seed);

/// Exhaustive marginal-gain greedy: each round evaluates the spread gain of
/// every remaining candidate and keeps the best (ties to the lowest id).
/// Gains are evaluated exactly when the whole graph fits the enumeration
/// budget and `exact_when_eligible` is set, otherwise by mc_estimate with
/// per-(iteration, candidate) streams derived from master_seed.
SeedSelectionReport modified_greedy(const Graph& g, NodeId k,
                                    const DiffusionSpec& spec, SpreadKind kind,
                                    std::uint64_t replicas,
                                    std::uint64_t master_seed,
                                    bool exact_when_eligible = true,
                                    int threads = 1);

}  // namespace infmax
