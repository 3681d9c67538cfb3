#include "infmax/spread.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cascade_engine.hpp"

namespace infmax {

const char* spread_kind_name(SpreadKind k) {
  switch (k) {
    case SpreadKind::Spread: return "spread";
    case SpreadKind::OpinionSpread: return "opinion_spread";
    case SpreadKind::EffectiveOpinionSpread: return "effective_opinion_spread";
  }
  return "?";
}

namespace {

double gamma_from_state(const detail::CascadeState& state,
                        std::span<const NodeId> sorted_seeds, SpreadKind kind,
                        double lambda) {
  switch (kind) {
    case SpreadKind::Spread:
      return static_cast<double>(state.activated_order.size() -
                                 sorted_seeds.size());
    case SpreadKind::OpinionSpread: {
      double sum = 0.0;
      for (NodeId v : state.activated_order) {
        if (std::binary_search(sorted_seeds.begin(), sorted_seeds.end(), v))
          continue;
        sum += state.opinion[v];
      }
      return sum;
    }
    case SpreadKind::EffectiveOpinionSpread: {
      double positive = 0.0, negative = 0.0;
      for (NodeId v : state.activated_order) {
        if (std::binary_search(sorted_seeds.begin(), sorted_seeds.end(), v))
          continue;
        const double o = state.opinion[v];
        if (o > 0.0) positive += o;
        if (o < 0.0) negative += -o;
      }
      return positive - lambda * negative;
    }
  }
  return 0.0;
}

std::vector<NodeId> sorted_unique_seeds(std::span<const NodeId> seeds) {
  std::vector<NodeId> s(seeds.begin(), seeds.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

double spread_value(const CascadeOutcome& outcome,
                    std::span<const NodeId> seeds, SpreadKind kind,
                    double lambda) {
  auto sorted = sorted_unique_seeds(seeds);
  switch (kind) {
    case SpreadKind::Spread:
      return static_cast<double>(outcome.activated.size() - sorted.size());
    case SpreadKind::OpinionSpread: {
      double sum = 0.0;
      for (std::size_t i = 0; i < outcome.activated.size(); ++i) {
        if (std::binary_search(sorted.begin(), sorted.end(),
                               outcome.activated[i]))
          continue;
        sum += outcome.final_opinion[i];
      }
      return sum;
    }
    case SpreadKind::EffectiveOpinionSpread: {
      double positive = 0.0, negative = 0.0;
      for (std::size_t i = 0; i < outcome.activated.size(); ++i) {
        if (std::binary_search(sorted.begin(), sorted.end(),
                               outcome.activated[i]))
          continue;
        const double o = outcome.final_opinion[i];
        if (o > 0.0) positive += o;
        if (o < 0.0) negative += -o;
      }
      return positive - lambda * negative;
    }
  }
  return 0.0;
}

SpreadEstimate mc_estimate(const Graph& g, std::span<const NodeId> seeds,
                           const DiffusionSpec& spec, SpreadKind kind,
                           std::uint64_t replicas, std::uint64_t master_seed,
                           int threads) {
  detail::validate_cascade_inputs(g, seeds, spec);
  if (replicas == 0) {
    throw std::invalid_argument("replicas must be at least 1");
  }

  const auto sorted = sorted_unique_seeds(seeds);
  std::vector<double> values(replicas);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    detail::CascadeState state;
    for (std::uint64_t i = lo; i < hi; ++i) {
      detail::HashChoices choices(derive_stream(master_seed, i));
      detail::run_cascade_into(g, sorted, spec, choices, state);
      values[i] = gamma_from_state(state, sorted, kind, spec.lambda);
    }
  };

  const unsigned worker_count = std::max(
      1u, std::min<unsigned>(threads > 0 ? static_cast<unsigned>(threads)
                                         : std::thread::hardware_concurrency(),
                             static_cast<unsigned>(replicas)));
  if (worker_count <= 1) {
    run_range(0, replicas);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      const std::uint64_t lo = replicas * w / worker_count;
      const std::uint64_t hi = replicas * (w + 1) / worker_count;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  SpreadEstimate est;
  est.kind = kind;
  est.replicas = replicas;
  est.mean = pairwise_sum(values) / static_cast<double>(replicas);
  if (replicas > 1) {
    std::vector<double> sq(replicas);
    for (std::uint64_t i = 0; i < replicas; ++i) {
      const double d = values[i] - est.mean;
      sq[i] = d * d;
    }
    const double var =
        pairwise_sum(sq) / static_cast<double>(replicas - 1);
    est.std_error = std::sqrt(var / static_cast<double>(replicas));
  }
  return est;
}

// ---------------------------------------------------------------------------
// Exact enumeration.

namespace {

// One branch point in the decision tree. Binary coins carry two options
// (success, failure); live-edge choices carry in-degree + 1 options where
// the last one means "no live arc".
struct Decision {
  int option;
  double prob;
  std::vector<double> option_probs;
};

class ReplayChoices {
 public:
  explicit ReplayChoices(std::vector<Decision>* trail) : trail_(trail) {}

  bool arc_coin(EdgeId, double p) { return binary(p); }
  bool phi_coin(EdgeId, double phi) { return binary(phi); }

  int live_in_choice(const Graph& g, NodeId, std::span<const InArc> in) {
    std::vector<double> probs(in.size() + 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      probs[i] = g.w(in[i].edge);
      sum += probs[i];
    }
    probs[in.size()] = std::max(0.0, 1.0 - sum);
    int taken = next_option(std::move(probs));
    return taken == static_cast<int>(in.size()) ? -1 : taken;
  }

 private:
  bool binary(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next_option({p, 1.0 - p}) == 0;
  }

  int next_option(std::vector<double> probs) {
    if (cursor_ < trail_->size()) {
      return (*trail_)[cursor_++].option;
    }
    int first = 0;
    while (probs[static_cast<std::size_t>(first)] <= 0.0) ++first;
    trail_->push_back(
        {first, probs[static_cast<std::size_t>(first)], std::move(probs)});
    ++cursor_;
    return first;
  }

  std::vector<Decision>* trail_;
  std::size_t cursor_ = 0;
};

// Forward reachability over arcs that can possibly carry an activation.
std::vector<std::uint8_t> plausible_closure(const Graph& g,
                                            std::span<const NodeId> seeds,
                                            bool lt_family) {
  std::vector<std::uint8_t> in_closure(g.node_count(), 0);
  std::vector<NodeId> queue(seeds.begin(), seeds.end());
  for (NodeId s : queue) in_closure[s] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const OutArc& arc : g.out_arcs(queue[head])) {
      const double chance = lt_family ? g.w(arc.edge) : g.p(arc.edge);
      if (chance <= 0.0 || in_closure[arc.dst]) continue;
      in_closure[arc.dst] = 1;
      queue.push_back(arc.dst);
    }
  }
  return in_closure;
}

bool strictly_between_01(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

double exact_choice_bits(const Graph& g, std::span<const NodeId> seeds,
                         const DiffusionSpec& spec) {
  const auto sorted = sorted_unique_seeds(seeds);
  switch (spec.model) {
    case DiffusionModel::Ic:
    case DiffusionModel::Wc:
    case DiffusionModel::OiIc: {
      const auto closure = plausible_closure(g, sorted, false);
      double bits = 0.0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!closure[g.arc_src(e)]) continue;
        if (strictly_between_01(g.p(e))) bits += 1.0;
        if (spec.model == DiffusionModel::OiIc && g.p(e) > 0.0 &&
            strictly_between_01(g.phi(e))) {
          bits += 1.0;
        }
      }
      return bits;
    }
    case DiffusionModel::Lt:
    case DiffusionModel::LtLiveEdge: {
      const auto closure = plausible_closure(g, sorted, true);
      double bits = 0.0;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!closure[v]) continue;
        std::size_t options = 0;
        double sum = 0.0;
        for (const InArc& arc : g.in_arcs(v)) {
          if (g.w(arc.edge) > 0.0) {
            ++options;
            sum += g.w(arc.edge);
          }
        }
        if (sum < 1.0) ++options;  // the "no live arc" outcome
        if (options > 1) bits += std::log2(static_cast<double>(options));
      }
      return bits;
    }
    case DiffusionModel::OiLt: {
      // The threshold layer is deterministic; only orientation coins on
      // arcs between nodes activated in order remain stochastic.
      detail::HashChoices choices(0);
      detail::CascadeState state;
      DiffusionSpec lt_spec{DiffusionModel::Lt, spec.lambda};
      detail::run_cascade_into(g, sorted, lt_spec, choices, state);
      double bits = 0.0;
      for (NodeId v : state.activated_order) {
        if (state.step[v] == 0) continue;
        for (const InArc& arc : g.in_arcs(v)) {
          if (state.active[arc.src] && state.step[arc.src] < state.step[v] &&
              strictly_between_01(g.phi(arc.edge))) {
            bits += 1.0;
          }
        }
      }
      return bits;
    }
  }
  return 0.0;
}

void enumerate_outcomes(
    const Graph& g, std::span<const NodeId> seeds, const DiffusionSpec& spec,
    const std::function<void(const CascadeOutcome&, double)>& visitor,
    double max_choice_bits) {
  detail::validate_cascade_inputs(g, seeds, spec);
  const double bits = exact_choice_bits(g, seeds, spec);
  if (bits > max_choice_bits) {
    throw OracleBudgetError(
        "exact enumeration needs " + std::to_string(bits) +
        " choice bits, budget is " + std::to_string(max_choice_bits));
  }

  DiffusionSpec effective = spec;
  if (spec.model == DiffusionModel::Lt) {
    effective.model = DiffusionModel::LtLiveEdge;
  }

  const auto sorted = sorted_unique_seeds(seeds);
  std::vector<Decision> trail;
  detail::CascadeState state;
  CascadeOutcome outcome;

  while (true) {
    ReplayChoices choices(&trail);
    detail::run_cascade_into(g, sorted, effective, choices, state);

    double prob = 1.0;
    for (const Decision& d : trail) prob *= d.prob;

    outcome.activated.assign(state.activated_order.begin(),
                             state.activated_order.end());
    std::sort(outcome.activated.begin(), outcome.activated.end());
    outcome.final_opinion.clear();
    outcome.activation_step.clear();
    for (NodeId v : outcome.activated) {
      outcome.final_opinion.push_back(state.opinion[v]);
      outcome.activation_step.push_back(state.step[v]);
    }
    visitor(outcome, prob);

    // Advance the deepest decision that still has an unexplored option.
    bool advanced = false;
    while (!trail.empty()) {
      Decision& d = trail.back();
      int next = d.option + 1;
      while (next < static_cast<int>(d.option_probs.size()) &&
             d.option_probs[static_cast<std::size_t>(next)] <= 0.0) {
        ++next;
      }
      if (next < static_cast<int>(d.option_probs.size())) {
        d.option = next;
        d.prob = d.option_probs[static_cast<std::size_t>(next)];
        advanced = true;
        break;
      }
      trail.pop_back();
    }
    if (!advanced) break;
  }
}

double exact_spread(const Graph& g, std::span<const NodeId> seeds,
                    const DiffusionSpec& spec, SpreadKind kind,
                    double max_choice_bits) {
  const auto sorted = sorted_unique_seeds(seeds);
  double total = 0.0;
  enumerate_outcomes(
      g, sorted, spec,
      [&](const CascadeOutcome& outcome, double prob) {
        total += prob * spread_value(outcome, sorted, kind, spec.lambda);
      },
      max_choice_bits);
  return total;
}

}  // namespace infmax
