#include "infmax/diffusion.hpp"

#include <algorithm>

#include "cascade_engine.hpp"

namespace infmax {

const char* model_name(DiffusionModel m) {
  switch (m) {
    case DiffusionModel::Ic: return "ic";
    case DiffusionModel::Wc: return "wc";
    case DiffusionModel::Lt: return "lt";
    case DiffusionModel::LtLiveEdge: return "lt_live_edge";
    case DiffusionModel::OiIc: return "oi_ic";
    case DiffusionModel::OiLt: return "oi_lt";
  }
  return "?";
}

bool CascadeOutcome::is_activated(NodeId v) const {
  return std::binary_search(activated.begin(), activated.end(), v);
}

double CascadeOutcome::final_opinion_of(NodeId v) const {
  auto it = std::lower_bound(activated.begin(), activated.end(), v);
  if (it == activated.end() || *it != v) {
    throw std::invalid_argument("node not activated: " + std::to_string(v));
  }
  return final_opinion[static_cast<std::size_t>(it - activated.begin())];
}

double simultaneous_activation_opinion(double own_opinion,
                                       std::span<const double> contributions) {
  if (contributions.empty()) {
    throw std::invalid_argument("opinion update needs at least one activator");
  }
  double sum = 0.0;
  for (double x : contributions) sum += x;
  return detail::averaged_opinion_update(
      own_opinion, sum, static_cast<std::uint32_t>(contributions.size()));
}

namespace detail {

void validate_cascade_inputs(const Graph& g, std::span<const NodeId> seeds,
                             const DiffusionSpec& spec) {
  if (seeds.empty()) {
    throw std::invalid_argument("seed set must be non-empty");
  }
  for (NodeId s : seeds) {
    if (s >= g.node_count()) {
      throw std::invalid_argument("seed id out of range: " +
                                  std::to_string(s));
    }
  }
  if (!(spec.lambda >= 0.0)) {
    throw std::invalid_argument("lambda must be non-negative");
  }
}

}  // namespace detail

CascadeOutcome run_cascade(const Graph& g, std::span<const NodeId> seeds,
                           const DiffusionSpec& spec,
                           std::uint64_t stream_seed) {
  detail::validate_cascade_inputs(g, seeds, spec);

  detail::HashChoices choices(stream_seed);
  detail::CascadeState state;
  detail::run_cascade_into(g, seeds, spec, choices, state);

  CascadeOutcome out;
  out.activated.assign(state.activated_order.begin(),
                       state.activated_order.end());
  std::sort(out.activated.begin(), out.activated.end());
  out.final_opinion.reserve(out.activated.size());
  out.activation_step.reserve(out.activated.size());
  for (NodeId v : out.activated) {
    out.final_opinion.push_back(state.opinion[v]);
    out.activation_step.push_back(state.step[v]);
  }
  return out;
}

}  // namespace infmax
