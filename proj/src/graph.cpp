#include "infmax/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "infmax/rng.hpp"

namespace infmax {

bool Graph::has_arc(NodeId u, NodeId v) const {
  auto arcs = out_arcs(u);
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), v,
      [](const OutArc& a, NodeId target) { return a.dst < target; });
  return it != arcs.end() && it->dst == v;
}

Graph::Builder::Builder(NodeId node_count)
    : n_(node_count), opinion_(node_count, 0.0), theta_(node_count, 1.0) {}

namespace {
void check_unit_range(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " outside [0,1]: " +
                                std::to_string(x));
  }
}
}  // namespace

void Graph::Builder::add_arc(NodeId src, NodeId dst, double p, double w,
                             double phi) {
  if (src >= n_ || dst >= n_) {
    throw std::invalid_argument("arc endpoint out of range");
  }
  if (src == dst) {
    throw std::invalid_argument("self-loop rejected: node " +
                                std::to_string(src));
  }
  check_unit_range(p, "p");
  check_unit_range(w, "w");
  check_unit_range(phi, "phi");
  arcs_.push_back({src, dst, p, w, phi, arcs_.size()});
}

void Graph::Builder::set_opinion(NodeId v, double opinion) {
  if (!(opinion >= -1.0 && opinion <= 1.0)) {
    throw std::invalid_argument("opinion outside [-1,1]: " +
                                std::to_string(opinion));
  }
  opinion_[v] = opinion;
}

void Graph::Builder::set_theta(NodeId v, double theta) {
  check_unit_range(theta, "theta");
  theta_[v] = theta;
}

void Graph::Builder::set_original_ids(std::vector<std::int64_t> ids) {
  original_ids_ = std::move(ids);
}

Graph Graph::Builder::build() {
  // Keep-first semantics for duplicate ordered pairs: sort by (src, dst,
  // insertion order) and retain the earliest occurrence.
  std::sort(arcs_.begin(), arcs_.end(),
            [](const PendingArc& a, const PendingArc& b) {
              if (a.src != b.src) return a.src < b.src;
              if (a.dst != b.dst) return a.dst < b.dst;
              return a.order < b.order;
            });
  std::vector<PendingArc> kept;
  kept.reserve(arcs_.size());
  for (const auto& arc : arcs_) {
    if (!kept.empty() && kept.back().src == arc.src &&
        kept.back().dst == arc.dst) {
      ++duplicates_dropped_;
      continue;
    }
    kept.push_back(arc);
  }

  Graph g;
  g.n_ = n_;
  const std::size_t m = kept.size();
  g.src_.resize(m);
  g.dst_.resize(m);
  g.p_.resize(m);
  g.w_.resize(m);
  g.phi_.resize(m);
  g.out_.resize(m);
  g.out_begin_.assign(n_ + 1, 0);
  for (const auto& arc : kept) ++g.out_begin_[arc.src + 1];
  std::partial_sum(g.out_begin_.begin(), g.out_begin_.end(),
                   g.out_begin_.begin());
  for (EdgeId e = 0; e < m; ++e) {
    const auto& arc = kept[e];
    g.src_[e] = arc.src;
    g.dst_[e] = arc.dst;
    g.p_[e] = arc.p;
    g.w_[e] = arc.w;
    g.phi_[e] = arc.phi;
    g.out_[e] = OutArc{arc.dst, e};  // kept is already in CSR order
  }

  // In-adjacency referencing the same edge ids, sorted by (dst, src).
  g.in_begin_.assign(n_ + 1, 0);
  for (EdgeId e = 0; e < m; ++e) ++g.in_begin_[g.dst_[e] + 1];
  std::partial_sum(g.in_begin_.begin(), g.in_begin_.end(),
                   g.in_begin_.begin());
  g.in_.resize(m);
  {
    std::vector<std::size_t> cursor(g.in_begin_.begin(), g.in_begin_.end() - 1);
    for (EdgeId e = 0; e < m; ++e) {
      g.in_[cursor[g.dst_[e]]++] = InArc{g.src_[e], e};
    }
    for (NodeId v = 0; v < n_; ++v) {
      std::sort(g.in_.begin() + g.in_begin_[v],
                g.in_.begin() + g.in_begin_[v + 1],
                [](const InArc& a, const InArc& b) { return a.src < b.src; });
    }
  }

  // Threshold weights: renormalize any node whose incoming sum exceeds 1.
  for (NodeId v = 0; v < n_; ++v) {
    double sum = 0.0;
    for (const InArc& a : g.in_arcs(v)) sum += g.w_[a.edge];
    if (sum > 1.0) {
      for (const InArc& a : g.in_arcs(v)) g.w_[a.edge] /= sum;
    }
  }

  g.opinion_ = std::move(opinion_);
  g.theta_ = std::move(theta_);
  g.original_ids_ = std::move(original_ids_);
  return g;
}

NodeMask NodeMask::united(const NodeMask& other) const {
  if (excluded_.size() != other.excluded_.size()) {
    throw std::invalid_argument("mask size mismatch");
  }
  NodeMask out(static_cast<NodeId>(excluded_.size()));
  for (NodeId v = 0; v < excluded_.size(); ++v) {
    if (excluded_[v] || other.excluded_[v]) out.exclude(v);
  }
  return out;
}

GraphView::GraphView(const Graph& g, NodeMask mask)
    : g_(&g), mask_(std::move(mask)) {
  if (mask_.size() != g.node_count()) {
    throw std::invalid_argument("mask does not match graph node count");
  }
}

int diameter_estimate(const Graph& g, std::size_t sample_count,
                      std::uint64_t rng_seed) {
  const NodeId n = g.node_count();
  if (n == 0) return 0;
  if (sample_count == 0) {
    throw std::invalid_argument("sample_count must be at least 1");
  }

  std::vector<NodeId> sources(n);
  std::iota(sources.begin(), sources.end(), NodeId{0});
  if (sample_count < n) {
    SequentialRng rng(rng_seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
      std::size_t j = i + rng.below(n - i);
      std::swap(sources[i], sources[j]);
    }
    sources.resize(sample_count);
  }

  int best = 0;
  std::vector<int> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s : sources) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId u = queue[head];
      for (const OutArc& a : g.out_arcs(u)) {
        if (dist[a.dst] < 0) {
          dist[a.dst] = dist[u] + 1;
          best = std::max(best, dist[a.dst]);
          queue.push_back(a.dst);
        }
      }
    }
  }
  return best;
}

}  // namespace infmax
