#pragma once

#include "infmax/graph.hpp"

namespace infmax::detail {

// Internal escape hatch for the parameter-assignment and attribute-loading
// paths. Graphs stay immutable through the public API; these helpers only
// operate on freshly copied instances.
struct GraphMutator {
  static std::vector<double>& p(Graph& g) { return g.p_; }
  static std::vector<double>& w(Graph& g) { return g.w_; }
  static std::vector<double>& phi(Graph& g) { return g.phi_; }
  static std::vector<double>& opinion(Graph& g) { return g.opinion_; }
  static std::vector<double>& theta(Graph& g) { return g.theta_; }
};

}  // namespace infmax::detail
