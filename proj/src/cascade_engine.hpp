#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "infmax/diffusion.hpp"
#include "infmax/graph.hpp"
#include "infmax/rng.hpp"

namespace infmax::detail {

// Shared arithmetic for the opinion layer: average of the signed activator
// contributions, averaged with the node's own opinion.
inline double averaged_opinion_update(double own, double contribution_sum,
                                      std::uint32_t count) {
  const double avg =
      std::clamp(contribution_sum / static_cast<double>(count), -1.0, 1.0);
  return std::clamp((own + avg) / 2.0, -1.0, 1.0);
}

// Dense, reusable cascade scratch. reset() is O(touched nodes), not O(n).
struct CascadeState {
  std::vector<std::uint8_t> active;
  std::vector<double> opinion;
  std::vector<std::uint32_t> step;
  std::vector<NodeId> activated_order;  // ascending step, ascending id within

  void ensure(NodeId n) {
    if (active.size() < n) {
      active.resize(n, 0);
      opinion.resize(n, 0.0);
      step.resize(n, 0);
    }
  }
  void reset(NodeId n) {
    ensure(n);
    for (NodeId v : activated_order) active[v] = 0;
    activated_order.clear();
  }
};

// Production choice source: every arc/node has its own coin derived from the
// stream seed, i.e. a virtual pre-drawn coin table. Activation coins,
// orientation coins, and live-edge choices use independent substreams so
// models sharing an activation layer stay coupled under one seed.
class HashChoices {
 public:
  explicit HashChoices(std::uint64_t stream_seed)
      : arc_seed_(derive_stream(stream_seed, 0x11)),
        phi_seed_(derive_stream(stream_seed, 0x22)),
        node_seed_(derive_stream(stream_seed, 0x33)) {}

  bool arc_coin(EdgeId e, double p) { return keyed_unit(arc_seed_, e) < p; }
  bool phi_coin(EdgeId e, double phi) { return keyed_unit(phi_seed_, e) < phi; }

  // Index into in_arcs(v), or -1 for "no live incoming arc".
  int live_in_choice(const Graph& g, NodeId v, std::span<const InArc> in) {
    double x = keyed_unit(node_seed_, v);
    double cum = 0.0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      cum += g.w(in[i].edge);
      if (x < cum) return static_cast<int>(i);
    }
    return -1;
  }

 private:
  std::uint64_t arc_seed_, phi_seed_, node_seed_;
};

inline void seed_frontier(const Graph& g, std::span<const NodeId> seeds,
                          CascadeState& state, std::vector<NodeId>& frontier) {
  frontier.assign(seeds.begin(), seeds.end());
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()),
                 frontier.end());
  for (NodeId s : frontier) {
    state.active[s] = 1;
    state.step[s] = 0;
    state.opinion[s] = g.opinion(s);
    state.activated_order.push_back(s);
  }
}

template <class Choices>
void run_ic_family(const Graph& g, std::span<const NodeId> seeds,
                   DiffusionModel model, Choices& choices,
                   CascadeState& state) {
  const bool aware = (model == DiffusionModel::OiIc);
  // Same-step contribution accumulators; entries are cleared on activation,
  // so the buffers stay all-zero between runs.
  static thread_local std::vector<double> contrib;
  static thread_local std::vector<std::uint32_t> succ_count;
  if (aware && contrib.size() < g.node_count()) {
    contrib.resize(g.node_count(), 0.0);
    succ_count.resize(g.node_count(), 0);
  }

  std::vector<NodeId> frontier;
  seed_frontier(g, seeds, state, frontier);

  std::vector<NodeId> pending;
  std::uint32_t t = 1;
  while (!frontier.empty()) {
    pending.clear();
    for (NodeId u : frontier) {
      for (const OutArc& arc : g.out_arcs(u)) {
        const NodeId v = arc.dst;
        if (state.active[v]) continue;
        if (!choices.arc_coin(arc.edge, g.p(arc.edge))) continue;
        if (aware) {
          const bool agree = choices.phi_coin(arc.edge, g.phi(arc.edge));
          if (succ_count[v] == 0) pending.push_back(v);
          contrib[v] += (agree ? 1.0 : -1.0) * state.opinion[u];
          ++succ_count[v];
        } else {
          pending.push_back(v);  // dedup below
        }
      }
    }
    std::sort(pending.begin(), pending.end());
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
    for (NodeId v : pending) {
      state.active[v] = 1;
      state.step[v] = t;
      if (aware) {
        state.opinion[v] =
            averaged_opinion_update(g.opinion(v), contrib[v], succ_count[v]);
        contrib[v] = 0.0;
        succ_count[v] = 0;
      } else {
        state.opinion[v] = g.opinion(v);
      }
      state.activated_order.push_back(v);
    }
    frontier = pending;
    ++t;
  }
}

template <class Choices>
void run_lt_family(const Graph& g, std::span<const NodeId> seeds,
                   DiffusionModel model, Choices& choices,
                   CascadeState& state) {
  const bool aware = (model == DiffusionModel::OiLt);
  static thread_local std::vector<double> acc;
  if (acc.size() < g.node_count()) acc.resize(g.node_count(), 0.0);

  std::vector<NodeId> frontier;
  seed_frontier(g, seeds, state, frontier);

  std::vector<NodeId> touched;
  std::vector<NodeId> dirty;  // accumulator entries to clear at the end
  std::vector<NodeId> pending;
  std::uint32_t t = 1;
  while (!frontier.empty()) {
    touched.clear();
    for (NodeId u : frontier) {
      for (const OutArc& arc : g.out_arcs(u)) {
        if (state.active[arc.dst]) continue;
        if (acc[arc.dst] == 0.0) dirty.push_back(arc.dst);
        acc[arc.dst] += g.w(arc.edge);
        touched.push_back(arc.dst);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    pending.clear();
    for (NodeId v : touched) {
      if (acc[v] >= g.theta(v)) pending.push_back(v);
    }
    for (NodeId v : pending) {
      state.active[v] = 1;
      state.step[v] = t;
      if (aware) {
        // Contributors are frozen to in-neighbors active strictly before t.
        double sum = 0.0;
        std::uint32_t cnt = 0;
        for (const InArc& arc : g.in_arcs(v)) {
          if (!state.active[arc.src] || state.step[arc.src] >= t) continue;
          const bool agree = choices.phi_coin(arc.edge, g.phi(arc.edge));
          sum += (agree ? 1.0 : -1.0) * state.opinion[arc.src];
          ++cnt;
        }
        state.opinion[v] =
            cnt ? averaged_opinion_update(g.opinion(v), sum, cnt)
                : std::clamp(g.opinion(v) / 2.0, -1.0, 1.0);
      } else {
        state.opinion[v] = g.opinion(v);
      }
      state.activated_order.push_back(v);
    }
    frontier = pending;
    ++t;
  }
  for (NodeId v : dirty) acc[v] = 0.0;
}

template <class Choices>
void run_live_edge(const Graph& g, std::span<const NodeId> seeds,
                   Choices& choices, CascadeState& state) {
  // Live in-arc choices are queried lazily, only for nodes an active node
  // points at; the exact enumerator relies on this to keep its decision
  // tree small.
  static thread_local std::vector<int> choice;
  static thread_local std::vector<std::uint8_t> chosen;
  if (chosen.size() < g.node_count()) {
    choice.resize(g.node_count(), -1);
    chosen.resize(g.node_count(), 0);
  }
  std::vector<NodeId> queried;

  auto live_choice = [&](NodeId v) {
    if (!chosen[v]) {
      choice[v] = choices.live_in_choice(g, v, g.in_arcs(v));
      chosen[v] = 1;
      queried.push_back(v);
    }
    return choice[v];
  };

  std::vector<NodeId> frontier;
  seed_frontier(g, seeds, state, frontier);

  std::vector<NodeId> pending;
  std::uint32_t t = 1;
  while (!frontier.empty()) {
    pending.clear();
    for (NodeId u : frontier) {
      for (const OutArc& arc : g.out_arcs(u)) {
        const NodeId v = arc.dst;
        if (state.active[v]) continue;
        if (g.w(arc.edge) <= 0.0) continue;  // can never be the live arc
        int idx = live_choice(v);
        if (idx >= 0 && g.in_arcs(v)[static_cast<std::size_t>(idx)].src == u) {
          pending.push_back(v);
        }
      }
    }
    std::sort(pending.begin(), pending.end());
    pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
    for (NodeId v : pending) {
      state.active[v] = 1;
      state.step[v] = t;
      state.opinion[v] = g.opinion(v);
      state.activated_order.push_back(v);
    }
    frontier = pending;
    ++t;
  }
  for (NodeId v : queried) chosen[v] = 0;
}

template <class Choices>
void run_cascade_into(const Graph& g, std::span<const NodeId> seeds,
                      const DiffusionSpec& spec, Choices& choices,
                      CascadeState& state) {
  state.reset(g.node_count());
  switch (spec.model) {
    case DiffusionModel::Ic:
    case DiffusionModel::Wc:
    case DiffusionModel::OiIc:
      run_ic_family(g, seeds, spec.model, choices, state);
      break;
    case DiffusionModel::Lt:
    case DiffusionModel::OiLt:
      run_lt_family(g, seeds, spec.model, choices, state);
      break;
    case DiffusionModel::LtLiveEdge:
      run_live_edge(g, seeds, choices, state);
      break;
  }
}

void validate_cascade_inputs(const Graph& g, std::span<const NodeId> seeds,
                             const DiffusionSpec& spec);

}  // namespace infmax::detail
