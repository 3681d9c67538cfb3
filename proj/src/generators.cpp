#include "infmax/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "infmax/rng.hpp"

namespace infmax {

Graph make_fig1() {
  Graph::Builder b(4);
  b.add_arc(kFig1B, kFig1A, 0.1, 0.1, 0.7);
  b.add_arc(kFig1B, kFig1C, 0.1, 0.1, 0.8);
  b.add_arc(kFig1A, kFig1D, 0.8, 0.8, 0.9);
  b.add_arc(kFig1C, kFig1D, 0.9, 0.9, 0.1);
  b.set_opinion(kFig1A, 0.8);
  b.set_opinion(kFig1B, 0.0);
  b.set_opinion(kFig1C, 0.6);
  b.set_opinion(kFig1D, -0.3);
  return b.build();
}

Graph make_directed_er(NodeId n, double arc_prob, std::uint64_t seed) {
  if (!(arc_prob >= 0.0 && arc_prob <= 1.0)) {
    throw std::invalid_argument("arc probability outside [0,1]");
  }
  SequentialRng rng(seed);
  Graph::Builder b(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.uniform(0.0, 1.0) < arc_prob) {
        b.add_arc(u, v, 0.1, 0.1, 1.0);
      }
    }
  }
  return b.build();
}

Graph make_random_out_tree(NodeId n, std::uint64_t seed, double p_min,
                           double p_max) {
  if (n == 0) throw std::invalid_argument("tree needs at least one node");
  SequentialRng rng(seed);
  Graph::Builder b(n);
  for (NodeId v = 1; v < n; ++v) {
    NodeId parent = static_cast<NodeId>(rng.below(v));
    double p = rng.uniform(p_min, p_max);
    double phi = rng.uniform(0.0, 1.0);
    b.add_arc(parent, v, p, p, phi);
  }
  for (NodeId v = 0; v < n; ++v) b.set_opinion(v, rng.uniform(-1.0, 1.0));
  return b.build();
}

Graph make_complete_tree(int depth, int branching, double p) {
  if (depth < 0 || branching < 1) {
    throw std::invalid_argument("invalid tree shape");
  }
  std::vector<std::pair<NodeId, NodeId>> arcs;
  NodeId next = 1;
  std::vector<NodeId> level{0};
  for (int d = 0; d < depth; ++d) {
    std::vector<NodeId> nextLevel;
    for (NodeId u : level) {
      for (int c = 0; c < branching; ++c) {
        arcs.emplace_back(u, next);
        nextLevel.push_back(next);
        ++next;
      }
    }
    level = std::move(nextLevel);
  }
  Graph::Builder b(next);
  for (auto [u, v] : arcs) b.add_arc(u, v, p, p, 1.0);
  return b.build();
}

Graph make_random_dag(NodeId n, double arc_prob, std::uint64_t seed) {
  SequentialRng rng(seed);
  Graph::Builder b(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.uniform(0.0, 1.0) < arc_prob) {
        double p = rng.uniform(0.1, 0.9);
        double w = rng.uniform(0.05, 0.5);
        b.add_arc(u, v, p, w, rng.uniform(0.0, 1.0));
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) b.set_opinion(v, rng.uniform(-1.0, 1.0));
  return b.build();
}

Graph make_random_path(int length, std::uint64_t seed) {
  if (length < 0) throw std::invalid_argument("negative path length");
  SequentialRng rng(seed);
  const NodeId n = static_cast<NodeId>(length + 1);
  Graph::Builder b(n);
  for (NodeId v = 0; v + 1 < n; ++v) {
    double p = rng.uniform(0.1, 0.9);
    b.add_arc(v, v + 1, p, p, rng.uniform(0.0, 1.0));
  }
  for (NodeId v = 0; v < n; ++v) b.set_opinion(v, rng.uniform(-1.0, 1.0));
  return b.build();
}

BipartiteFixture make_bipartite_counterexample(NodeId n_sources,
                                               NodeId n_sinks) {
  if (n_sources < 2) {
    throw std::invalid_argument("bipartite fixture needs at least 2 sources");
  }
  if (n_sinks < 2 * n_sources) {
    throw std::invalid_argument(
        "bipartite fixture needs at least 2 sinks per source");
  }
  BipartiteFixture fx;
  Graph::Builder b(n_sources + n_sinks);
  for (NodeId i = 0; i < n_sources; ++i) {
    const double phi = (i + 1 == n_sources) ? 0.0 : 1.0;
    b.add_arc(i, n_sources + 2 * i, 1.0, 1.0, phi);
    b.add_arc(i, n_sources + 2 * i + 1, 1.0, 1.0, phi);
    b.set_opinion(i, 1.0);
    fx.sources.push_back(i);
  }
  for (NodeId j = 0; j < n_sinks; ++j) {
    b.set_opinion(n_sources + j, 0.0);
    fx.sinks.push_back(n_sources + j);
  }
  fx.graph = b.build();
  return fx;
}

SetCoverFixture make_setcover_reduction(
    NodeId n_elements, const std::vector<std::vector<NodeId>>& subsets) {
  if (n_elements == 0 || subsets.empty()) {
    throw std::invalid_argument("set-cover instance must be non-empty");
  }
  const NodeId m = static_cast<NodeId>(subsets.size());
  const NodeId n = n_elements;
  if (m + n < 3) {
    throw std::invalid_argument("set-cover reduction needs m + n - 2 >= 1");
  }
  for (const auto& subset : subsets) {
    if (subset.empty()) {
      throw std::invalid_argument("empty subset in set-cover instance");
    }
    for (NodeId q : subset) {
      if (q >= n) {
        throw std::invalid_argument("subset element out of range");
      }
    }
  }

  // Layout: [0,m) subsets, [m,m+n) elements, [m+n, 2m+2n-2) middle layer,
  // then the sink.
  const NodeId mid_count = m + n - 2;
  const NodeId total = m + n + mid_count + 1;
  const NodeId sink = total - 1;
  Graph::Builder b(total);

  const double element_opinion = 1.0 / static_cast<double>(n);
  const double mid_opinion = -1.0 / (2.0 * static_cast<double>(n));
  const double sink_opinion = element_opinion - 1.0;

  SetCoverFixture fx;
  fx.element_count = n;
  for (NodeId i = 0; i < m; ++i) {
    b.set_opinion(i, 0.0);
    fx.subset_nodes.push_back(i);
    for (NodeId q : subsets[i]) {
      b.add_arc(i, m + q, 1.0, 1.0, 1.0);
    }
  }
  for (NodeId j = 0; j < n; ++j) {
    b.set_opinion(m + j, element_opinion);
    fx.element_nodes.push_back(m + j);
    for (NodeId t = 0; t < mid_count; ++t) {
      b.add_arc(m + j, m + n + t, 1.0, 1.0, 1.0);
    }
  }
  for (NodeId t = 0; t < mid_count; ++t) {
    b.set_opinion(m + n + t, mid_opinion);
    b.add_arc(m + n + t, sink, 1.0, 1.0, 1.0);
  }
  b.set_opinion(sink, sink_opinion);
  fx.sink = sink;
  fx.graph = b.build();
  return fx;
}

SetCoverFixture make_random_setcover_reduction(NodeId n_elements,
                                               NodeId n_subsets,
                                               NodeId subset_size,
                                               std::uint64_t seed) {
  if (subset_size == 0 || subset_size > n_elements) {
    throw std::invalid_argument("invalid subset size");
  }
  SequentialRng rng(seed);
  std::vector<std::vector<NodeId>> subsets(n_subsets);
  for (auto& subset : subsets) {
    std::vector<NodeId> pool(n_elements);
    for (NodeId q = 0; q < n_elements; ++q) pool[q] = q;
    for (NodeId i = 0; i < subset_size; ++i) {
      std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      subset.push_back(pool[i]);
    }
    std::sort(subset.begin(), subset.end());
  }
  return make_setcover_reduction(n_elements, subsets);
}

}  // namespace infmax
