#include "infmax/params.hpp"

#include <algorithm>
#include <stdexcept>

#include "graph_mutator.hpp"
#include "infmax/rng.hpp"

namespace infmax {

Graph assign_parameters(const Graph& g, const ParamScheme& scheme,
                        std::uint64_t rng_seed) {
  Graph out = g;
  SequentialRng rng(rng_seed);
  const EdgeId m = g.edge_count();

  switch (scheme.kind) {
    case ParamSchemeKind::IcUniform: {
      if (!(scheme.value >= 0.0 && scheme.value <= 1.0)) {
        throw std::invalid_argument("IC probability outside [0,1]");
      }
      auto& p = detail::GraphMutator::p(out);
      std::fill(p.begin(), p.end(), scheme.value);
      break;
    }
    case ParamSchemeKind::Wc: {
      auto& p = detail::GraphMutator::p(out);
      for (EdgeId e = 0; e < m; ++e) {
        p[e] = 1.0 / static_cast<double>(g.in_degree(g.arc_dst(e)));
      }
      break;
    }
    case ParamSchemeKind::LtWeights: {
      auto& w = detail::GraphMutator::w(out);
      for (EdgeId e = 0; e < m; ++e) {
        w[e] = 1.0 / static_cast<double>(g.in_degree(g.arc_dst(e)));
      }
      auto& theta = detail::GraphMutator::theta(out);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        theta[v] = rng.uniform(0.0, 1.0);
      }
      break;
    }
    case ParamSchemeKind::OpinionUniform: {
      auto& o = detail::GraphMutator::opinion(out);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        o[v] = rng.uniform(-1.0, 1.0);
      }
      break;
    }
    case ParamSchemeKind::OpinionNormal: {
      auto& o = detail::GraphMutator::opinion(out);
      for (NodeId v = 0; v < g.node_count(); ++v) {
        o[v] = std::clamp(rng.standard_normal(), -1.0, 1.0);
      }
      break;
    }
    case ParamSchemeKind::PhiUniform: {
      auto& phi = detail::GraphMutator::phi(out);
      for (EdgeId e = 0; e < m; ++e) {
        phi[e] = rng.uniform(0.0, 1.0);
      }
      break;
    }
  }
  return out;
}

}  // namespace infmax
