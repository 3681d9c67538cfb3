#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infmax/graph.hpp"

namespace infmax {

/// Diffusion models. Wc is IC dynamics with in-degree-assigned probabilities;
/// LtLiveEdge is the live-edge formulation of LT where every node samples at
/// most one incoming arc. OiIc/OiLt add the opinion layer on top of the
/// corresponding activation layer.
enum class DiffusionModel { Ic, Wc, Lt, LtLiveEdge, OiIc, OiLt };

constexpr bool is_opinion_aware(DiffusionModel m) {
  return m == DiffusionModel::OiIc || m == DiffusionModel::OiLt;
}
constexpr bool is_lt_family(DiffusionModel m) {
  return m == DiffusionModel::Lt || m == DiffusionModel::LtLiveEdge ||
         m == DiffusionModel::OiLt;
}

const char* model_name(DiffusionModel m);

struct DiffusionSpec {
  DiffusionModel model = DiffusionModel::Ic;
  /// Penalty on negative opinion mass in the effective opinion spread.
  double lambda = 1.0;
};

/// Result of one simulated cascade. The three vectors are parallel and
/// sorted by node id. Final opinions of seeds equal their initial opinions;
/// under opinion-oblivious models every activated node keeps its initial
/// opinion.
struct CascadeOutcome {
  std::vector<NodeId> activated;
  std::vector<double> final_opinion;
  std::vector<std::uint32_t> activation_step;

  bool is_activated(NodeId v) const;
  /// Final opinion of an activated node; throws if not activated.
  double final_opinion_of(NodeId v) const;
};

/// Final opinion of a node all of whose listed activators succeeded in the
/// same step: the signed contributions (+-1 times each activator's final
/// opinion) are averaged, then averaged with the node's own opinion. With a
/// single contribution this is exactly the one-activator update rule.
/// Throws std::invalid_argument on an empty contribution list.
double simultaneous_activation_opinion(double own_opinion,
                                       std::span<const double> contributions);

/// Runs one stochastic cascade. All randomness is a pure function of
/// `stream_seed`: coins are indexed by arc (activation and orientation use
/// independent substreams) and live-edge choices by node, so identical
/// inputs always yield the identical outcome, and two models that share an
/// activation layer (for instance Ic and OiIc) activate exactly the same
/// nodes under the same stream seed.
///
/// Activation proceeds in synchronous steps; newly activated nodes are
/// processed in ascending id and their out-arcs in storage order. Under OiIc
/// every in-neighbor that succeeds on v in the same step contributes its
/// signed opinion, and the contributions are averaged; under OiLt the
/// contributing set is frozen to the in-neighbors active strictly before v's
/// activation step.
///
/// Throws std::invalid_argument for empty seeds or ids out of range.
CascadeOutcome run_cascade(const Graph& g, std::span<const NodeId> seeds,
                           const DiffusionSpec& spec,
                           std::uint64_t stream_seed);

}  // namespace infmax
