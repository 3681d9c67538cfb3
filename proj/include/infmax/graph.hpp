#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace infmax {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Per-node attributes: personal opinion in [-1,1] and activation threshold
/// in [0,1]. The threshold is consulted only by the threshold-based models.
struct NodeAttrs {
  double opinion = 0.0;
  double theta = 1.0;
};

struct OutArc {
  NodeId dst;
  EdgeId edge;
};

struct InArc {
  NodeId src;
  EdgeId edge;
};

namespace detail {
struct GraphMutator;
}

/// Immutable directed graph with per-edge influence probability `p`,
/// threshold weight `w`, interaction probability `phi`, and per-node
/// attributes. Out- and in-adjacency index the same underlying edge array,
/// so the two directions can never disagree on parameters.
///
/// No self-loops, at most one arc per ordered pair. Threshold weights are
/// normalized at construction so that the incoming weight sum of every node
/// is at most 1.
class Graph {
 public:
  class Builder;

  Graph() = default;

  NodeId node_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(dst_.size()); }

  std::span<const OutArc> out_arcs(NodeId u) const {
    return {out_.data() + out_begin_[u], out_.data() + out_begin_[u + 1]};
  }
  std::span<const InArc> in_arcs(NodeId v) const {
    return {in_.data() + in_begin_[v], in_.data() + in_begin_[v + 1]};
  }
  std::size_t out_degree(NodeId u) const {
    return out_begin_[u + 1] - out_begin_[u];
  }
  std::size_t in_degree(NodeId v) const {
    return in_begin_[v + 1] - in_begin_[v];
  }

  NodeId arc_src(EdgeId e) const { return src_[e]; }
  NodeId arc_dst(EdgeId e) const { return dst_[e]; }
  double p(EdgeId e) const { return p_[e]; }
  double w(EdgeId e) const { return w_[e]; }
  double phi(EdgeId e) const { return phi_[e]; }

  double opinion(NodeId v) const { return opinion_[v]; }
  double theta(NodeId v) const { return theta_[v]; }

  /// True if the arc (u,v) exists. Arcs are stored sorted by destination per
  /// source, so this is a binary search over Out(u).
  bool has_arc(NodeId u, NodeId v) const;

  /// Original (pre-compaction) node ids when the graph was loaded from a
  /// file with sparse ids; empty for generated graphs (identity mapping).
  const std::vector<std::int64_t>& original_ids() const {
    return original_ids_;
  }
  std::int64_t original_id(NodeId v) const {
    return original_ids_.empty() ? static_cast<std::int64_t>(v)
                                 : original_ids_[v];
  }

 private:
  friend struct detail::GraphMutator;

  NodeId n_ = 0;
  std::vector<std::size_t> out_begin_{0};
  std::vector<std::size_t> in_begin_{0};
  std::vector<OutArc> out_;
  std::vector<InArc> in_;
  std::vector<NodeId> src_;
  std::vector<NodeId> dst_;
  std::vector<double> p_;
  std::vector<double> w_;
  std::vector<double> phi_;
  std::vector<double> opinion_;
  std::vector<double> theta_;
  std::vector<std::int64_t> original_ids_;
};

/// Accumulates arcs and produces a finished Graph. Duplicate ordered pairs
/// keep the first occurrence; the number dropped is reported through
/// `duplicates_dropped()`. Self-loops are rejected immediately.
class Graph::Builder {
 public:
  explicit Builder(NodeId node_count);

  /// Adds one directed arc. Throws std::invalid_argument on self-loops,
  /// out-of-range endpoints, or parameters outside [0,1].
  void add_arc(NodeId src, NodeId dst, double p, double w, double phi);

  void set_opinion(NodeId v, double opinion);
  void set_theta(NodeId v, double theta);
  void set_original_ids(std::vector<std::int64_t> ids);

  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

  /// Sorts arcs, drops duplicates, normalizes incoming threshold weights,
  /// and freezes the graph.
  Graph build();

 private:
  struct PendingArc {
    NodeId src, dst;
    double p, w, phi;
    std::size_t order;
  };

  NodeId n_;
  std::vector<PendingArc> arcs_;
  std::vector<double> opinion_;
  std::vector<double> theta_;
  std::vector<std::int64_t> original_ids_;
  std::size_t duplicates_dropped_ = 0;
};

/// Set of nodes excluded from a view. Realizes the already-activated set
/// V_a during greedy selection.
class NodeMask {
 public:
  NodeMask() = default;
  explicit NodeMask(NodeId node_count) : excluded_(node_count, 0) {}

  void exclude(NodeId v) {
    if (!excluded_[v]) {
      excluded_[v] = 1;
      ++count_;
    }
  }
  bool is_excluded(NodeId v) const {
    return !excluded_.empty() && excluded_[v] != 0;
  }
  NodeId excluded_count() const { return count_; }
  NodeId size() const { return static_cast<NodeId>(excluded_.size()); }
  bool empty() const { return count_ == 0; }

  /// Union of two masks over the same node range.
  NodeMask united(const NodeMask& other) const;

 private:
  std::vector<std::uint8_t> excluded_;
  NodeId count_ = 0;
};

/// Read-only view of a Graph with a set of nodes masked out. Masked nodes
/// have no incident arcs as seen through the view and are skipped as both
/// endpoints and intermediates. The underlying graph is never modified.
class GraphView {
 public:
  explicit GraphView(const Graph& g) : g_(&g), mask_(g.node_count()) {}
  GraphView(const Graph& g, NodeMask mask);
  // Views only reference the graph; never build one over a temporary.
  explicit GraphView(Graph&&) = delete;
  GraphView(Graph&&, NodeMask) = delete;

  const Graph& graph() const { return *g_; }
  const NodeMask& mask() const { return mask_; }

  bool live(NodeId v) const { return !mask_.is_excluded(v); }
  NodeId node_count() const { return g_->node_count(); }
  NodeId live_count() const { return g_->node_count() - mask_.excluded_count(); }

  /// View with additional nodes masked; equivalent to masking the union.
  GraphView masked_also(const NodeMask& more) const {
    return GraphView(*g_, mask_.united(more));
  }

 private:
  const Graph* g_;
  NodeMask mask_;
};

inline GraphView masked_view(const Graph& g, NodeMask mask) {
  return GraphView(g, std::move(mask));
}

/// Lower bound on the directed diameter: maximum BFS eccentricity over
/// `sample_count` distinct source nodes (all nodes when sample_count >= n).
/// Deterministic for a given seed. Returns 0 for the empty graph.
int diameter_estimate(const Graph& g, std::size_t sample_count,
                      std::uint64_t rng_seed);

}  // namespace infmax
