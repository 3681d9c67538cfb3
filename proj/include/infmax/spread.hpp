#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "infmax/diffusion.hpp"
#include "infmax/graph.hpp"

namespace infmax {

enum class SpreadKind { Spread, OpinionSpread, EffectiveOpinionSpread };

const char* spread_kind_name(SpreadKind k);

/// Monte-Carlo estimate of an expected spread quantity.
struct SpreadEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t replicas = 0;
  SpreadKind kind = SpreadKind::Spread;
};

/// Value of one realized cascade: number of activated non-seeds, their
/// summed final opinions, or the lambda-penalized positive/negative split.
double spread_value(const CascadeOutcome& outcome,
                    std::span<const NodeId> seeds, SpreadKind kind,
                    double lambda);

/// Averages spread_value over `replicas` independent cascades. Replica i
/// uses a stream derived from (master_seed, i), and the reduction sums an
/// indexed per-replica buffer pairwise, so the result is bit-identical for
/// any worker count. std_error is the sample standard deviation divided by
/// sqrt(replicas).
SpreadEstimate mc_estimate(const Graph& g, std::span<const NodeId> seeds,
                           const DiffusionSpec& spec, SpreadKind kind,
                           std::uint64_t replicas, std::uint64_t master_seed,
                           int threads = 1);

/// Thrown when an exact computation would exceed its enumeration budget.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the number of stochastic binary choices a cascade from
/// `seeds` can consume (log2 of the outcome-space size for categorical
/// choices). Forced coins (p of 0 or 1) do not count.
double exact_choice_bits(const Graph& g, std::span<const NodeId> seeds,
                         const DiffusionSpec& spec);

/// Enumerates every attainable outcome of the cascade together with its
/// probability; the probabilities of the visited leaves sum to 1. The
/// outcome reference passed to the visitor is reused between calls.
///
/// The plain Lt model is enumerated in its live-edge form (the expectation
/// over uniformly random thresholds); OiLt keeps the graph's fixed
/// thresholds, so only orientation coins are enumerated.
///
/// Throws OracleBudgetError when exact_choice_bits exceeds max_choice_bits.
void enumerate_outcomes(
    const Graph& g, std::span<const NodeId> seeds, const DiffusionSpec& spec,
    const std::function<void(const CascadeOutcome&, double)>& visitor,
    double max_choice_bits = 24.0);

/// Exact expected spread by weighted enumeration of all coin assignments.
double exact_spread(const Graph& g, std::span<const NodeId> seeds,
                    const DiffusionSpec& spec, SpreadKind kind,
                    double max_choice_bits = 24.0);

}  // namespace infmax
