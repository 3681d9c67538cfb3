#pragma once

#include <cstdint>
#include <vector>

#include "infmax/graph.hpp"

namespace infmax {

/// The four-node regression fixture: nodes A=0, B=1, C=2, D=3 with arcs
/// B->A (p=0.1, phi=0.7), B->C (p=0.1, phi=0.8), A->D (p=0.8, phi=0.9),
/// C->D (p=0.9, phi=0.1) and opinions 0.8, 0, 0.6, -0.3.
Graph make_fig1();

inline constexpr NodeId kFig1A = 0;
inline constexpr NodeId kFig1B = 1;
inline constexpr NodeId kFig1C = 2;
inline constexpr NodeId kFig1D = 3;

/// Directed Erdos-Renyi digraph: every ordered pair (u,v), u != v, carries
/// an arc with probability arc_prob. Edge parameters default to p=0.1,
/// w=0.1, phi=1.
Graph make_directed_er(NodeId n, double arc_prob, std::uint64_t seed);

/// Random out-tree rooted at 0: node i attaches to a uniformly random
/// earlier node. Arc p is drawn uniformly from [p_min, p_max], phi from
/// [0,1], opinions from [-1,1].
Graph make_random_out_tree(NodeId n, std::uint64_t seed, double p_min = 0.1,
                           double p_max = 0.9);

/// Complete branching^depth out-tree; depth 0 yields a single node.
Graph make_complete_tree(int depth, int branching, double p = 0.1);

/// Random DAG on n nodes: arcs only from lower to higher ids, each present
/// with probability arc_prob; w is drawn uniformly and renormalized by the
/// builder where needed.
Graph make_random_dag(NodeId n, double arc_prob, std::uint64_t seed);

/// Directed path u0 -> u1 -> ... -> u_{len}: random p in [0.1, 0.9], phi in
/// [0,1], opinions in [-1,1].
Graph make_random_path(int length, std::uint64_t seed);

/// Bipartite construction whose opinion spread is neither monotone nor
/// submodular: sources with opinion +1 each pointing at two private sinks
/// with opinion 0, all arcs with p=1, and phi=1 everywhere except on the
/// last source's arcs where phi=0.
struct BipartiteFixture {
  Graph graph;
  std::vector<NodeId> sources;
  std::vector<NodeId> sinks;
};
BipartiteFixture make_bipartite_counterexample(NodeId n_sources,
                                               NodeId n_sinks);

/// Set-cover reduction: one node per subset (opinion 0), one per element
/// (opinion 1/n), a third layer of m+n-2 nodes (opinion -1/(2n)), and a
/// sink (opinion 1/n - 1); all arcs with p=1, phi=1. Seeding a full cover
/// of size k gives effective opinion spread exactly 1/(2n); any non-cover
/// of subset nodes gives at most 0.
struct SetCoverFixture {
  Graph graph;
  std::vector<NodeId> subset_nodes;
  std::vector<NodeId> element_nodes;
  NodeId sink = 0;
  NodeId element_count = 0;
};
SetCoverFixture make_setcover_reduction(
    NodeId n_elements, const std::vector<std::vector<NodeId>>& subsets);

/// Random set-cover instance for the generator CLI.
SetCoverFixture make_random_setcover_reduction(NodeId n_elements,
                                               NodeId n_subsets,
                                               NodeId subset_size,
                                               std::uint64_t seed);

}  // namespace infmax
