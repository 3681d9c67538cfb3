#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "infmax/graph.hpp"

namespace infmax {

enum class ScoreMode { OpinionOblivious, OpinionAware };

/// Which per-arc probability feeds the score recurrences: the cascade
/// probability p (IC/WC) or the threshold weight w (LT via live edges).
enum class EdgeWeighting { InfluenceProbability, LtWeight };

/// Per-node scores Delta^l(u). Scores are defined exactly for the nodes
/// live under the mask the scorer ran with; opinion-aware scores may be
/// negative.
struct ScoreVector {
  std::vector<double> scores;
  int l = 0;
  NodeMask masked;
  /// Numeric cells of working memory the scorer allocated beyond the graph
  /// and the result itself.
  std::size_t workspace_cells = 0;

  double at(NodeId v) const;
  /// Live node with the maximum score; ties break to the lowest id.
  /// Empty when every node is masked.
  std::optional<NodeId> argmax_live() const;
};

/// Dense-matrix oracle: l rounds of PU <- PU (x) M where the row-by-column
/// accumulation combines path probabilities with probabilistic OR
/// (a u b = 1 - (1-a)(1-b)), the diagonal is zeroed after every round, and
/// scores accumulate row sums. Quadratic memory; refuses views larger than
/// node_cap.
ScoreVector path_union_scores(
    const GraphView& view, int l,
    EdgeWeighting weighting = EdgeWeighting::InfluenceProbability,
    NodeId node_cap = 512);

/// Linear-time score assignment: l sweeps of
/// Delta^i(u) = sum over live out-arcs of p * (1 + Delta^{i-1}(v)),
/// using two swapped per-node buffers. O(l(m+n)) time, O(n) extra memory.
ScoreVector easyim_scores(
    const GraphView& view, int l,
    EdgeWeighting weighting = EdgeWeighting::InfluenceProbability);

/// Opinion-aware score assignment; same loop structure as easyim_scores
/// with three per-node accumulators carrying opinion mass, signed
/// interaction weight, and the change-of-opinion term.
ScoreVector osim_scores(
    const GraphView& view, int l,
    EdgeWeighting weighting = EdgeWeighting::InfluenceProbability);

/// Mode dispatch: opinion-oblivious scoring runs easyim_scores, opinion-
/// aware runs osim_scores.
ScoreVector assign_score(
    const GraphView& view, ScoreMode mode, int l,
    EdgeWeighting weighting = EdgeWeighting::InfluenceProbability);

}  // namespace infmax
