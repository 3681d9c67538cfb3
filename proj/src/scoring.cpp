#include "infmax/scoring.hpp"

#include <stdexcept>

namespace infmax {

double ScoreVector::at(NodeId v) const {
  if (masked.is_excluded(v)) {
    throw std::invalid_argument("score undefined for masked node " +
                                std::to_string(v));
  }
  return scores[v];
}

std::optional<NodeId> ScoreVector::argmax_live() const {
  std::optional<NodeId> best;
  for (NodeId v = 0; v < scores.size(); ++v) {
    if (masked.is_excluded(v)) continue;
    if (!best || scores[v] > scores[*best]) best = v;
  }
  return best;
}

namespace {

void check_l(int l) {
  if (l < 1) throw std::invalid_argument("path-length bound l must be >= 1");
}

double arc_weight(const Graph& g, EdgeId e, EdgeWeighting weighting) {
  return weighting == EdgeWeighting::InfluenceProbability ? g.p(e) : g.w(e);
}

}  // namespace

ScoreVector path_union_scores(const GraphView& view, int l,
                              EdgeWeighting weighting, NodeId node_cap) {
  check_l(l);
  const Graph& g = view.graph();
  const NodeId n = g.node_count();
  if (n > node_cap) {
    throw std::invalid_argument(
        "path_union_scores refuses " + std::to_string(n) +
        " nodes (cap " + std::to_string(node_cap) + "): quadratic memory");
  }

  // M holds arc probabilities between live nodes; masked nodes contribute
  // neither as endpoints nor as intermediates.
  std::vector<double> M(static_cast<std::size_t>(n) * n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    if (!view.live(u)) continue;
    for (const OutArc& arc : g.out_arcs(u)) {
      if (!view.live(arc.dst)) continue;
      M[static_cast<std::size_t>(u) * n + arc.dst] =
          arc_weight(g, arc.edge, weighting);
    }
  }

  std::vector<double> pu(static_cast<std::size_t>(n) * n, 0.0);
  for (NodeId v = 0; v < n; ++v) pu[static_cast<std::size_t>(v) * n + v] = 1.0;
  std::vector<double> next(static_cast<std::size_t>(n) * n, 0.0);

  ScoreVector result;
  result.l = l;
  result.masked = view.mask();
  result.scores.assign(n, 0.0);
  result.workspace_cells = 3 * static_cast<std::size_t>(n) * n;

  for (int round = 1; round <= l; ++round) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        double acc = 0.0;
        for (NodeId k = 0; k < n; ++k) {
          const double term = pu[static_cast<std::size_t>(i) * n + k] *
                              M[static_cast<std::size_t>(k) * n + j];
          acc = acc + term - acc * term;  // probabilistic OR
        }
        next[static_cast<std::size_t>(i) * n + j] = acc;
      }
    }
    std::swap(pu, next);
    for (NodeId v = 0; v < n; ++v) pu[static_cast<std::size_t>(v) * n + v] = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      if (!view.live(u)) continue;
      double row = 0.0;
      for (NodeId v = 0; v < n; ++v) row += pu[static_cast<std::size_t>(u) * n + v];
      result.scores[u] += row;
    }
  }
  return result;
}

ScoreVector easyim_scores(const GraphView& view, int l,
                          EdgeWeighting weighting) {
  check_l(l);
  const Graph& g = view.graph();
  const NodeId n = g.node_count();

  std::vector<double> prev(n, 0.0);
  std::vector<double> cur(n, 0.0);
  for (int i = 1; i <= l; ++i) {
    for (NodeId u = 0; u < n; ++u) {
      if (!view.live(u)) continue;
      double s = 0.0;
      for (const OutArc& arc : g.out_arcs(u)) {
        if (!view.live(arc.dst)) continue;
        s += arc_weight(g, arc.edge, weighting) * (1.0 + prev[arc.dst]);
      }
      cur[u] = s;
    }
    std::swap(prev, cur);
  }

  ScoreVector result;
  result.l = l;
  result.masked = view.mask();
  result.scores = std::move(prev);
  result.workspace_cells = 2 * static_cast<std::size_t>(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!view.live(v)) result.scores[v] = 0.0;
  }
  return result;
}

ScoreVector osim_scores(const GraphView& view, int l, EdgeWeighting weighting) {
  check_l(l);
  const Graph& g = view.graph();
  const NodeId n = g.node_count();

  // Level buffers are swapped, never reallocated.
  std::vector<double> or_prev(n, 0.0), or_cur(n, 0.0);
  std::vector<double> alpha_prev(n, 0.0), alpha_cur(n, 0.0);
  std::vector<double> sc_prev(n, 0.0), sc_cur(n, 0.0);
  std::vector<double> delta(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    if (!view.live(v)) continue;
    or_prev[v] = g.opinion(v);
    alpha_prev[v] = 1.0;
  }

  for (int i = 1; i <= l; ++i) {
    for (NodeId u = 0; u < n; ++u) {
      if (!view.live(u)) continue;
      double or_acc = 0.0, alpha_acc = 0.0, sc_acc = 0.0;
      for (const OutArc& arc : g.out_arcs(u)) {
        const NodeId v = arc.dst;
        if (!view.live(v)) continue;
        const double p = arc_weight(g, arc.edge, weighting);
        or_acc += p * or_prev[v];
        alpha_acc += p * alpha_prev[v] * (2.0 * g.phi(arc.edge) - 1.0) / 2.0;
        sc_acc += p * sc_prev[v];
      }
      const double own = g.opinion(u) * alpha_acc;
      sc_acc += own;
      or_cur[u] = or_acc;
      alpha_cur[u] = alpha_acc;
      sc_cur[u] = sc_acc;
      delta[u] += (or_acc + sc_acc + own) / 2.0;
    }
    std::swap(or_prev, or_cur);
    std::swap(alpha_prev, alpha_cur);
    std::swap(sc_prev, sc_cur);
  }

  ScoreVector result;
  result.l = l;
  result.masked = view.mask();
  result.scores = std::move(delta);
  result.workspace_cells = 6 * static_cast<std::size_t>(n);
  return result;
}

ScoreVector assign_score(const GraphView& view, ScoreMode mode, int l,
                         EdgeWeighting weighting) {
  return mode == ScoreMode::OpinionOblivious
             ? easyim_scores(view, l, weighting)
             : osim_scores(view, l, weighting);
}

}  // namespace infmax
