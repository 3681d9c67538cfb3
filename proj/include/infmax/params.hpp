#pragma once

#include <cstdint>

#include "infmax/graph.hpp"

namespace infmax {

/// Parameter-assignment schemes following the usual experimental
/// conventions: uniform influence probabilities for IC, in-degree weighting
/// for WC and the threshold models, and random opinions/interactions.
enum class ParamSchemeKind {
  IcUniform,      // p <- value on every arc
  Wc,             // p <- 1/|In(dst)|
  LtWeights,      // w <- 1/|In(dst)|, theta ~ U(0,1)
  OpinionUniform, // o ~ U(-1,1)
  OpinionNormal,  // o ~ N(0,1), clamped to [-1,1]
  PhiUniform,     // phi ~ U(0,1)
};

struct ParamScheme {
  ParamSchemeKind kind;
  double value = 0.1;  // only used by IcUniform

  static ParamScheme ic_uniform(double p) { return {ParamSchemeKind::IcUniform, p}; }
  static ParamScheme wc() { return {ParamSchemeKind::Wc}; }
  static ParamScheme lt_weights() { return {ParamSchemeKind::LtWeights}; }
  static ParamScheme opinion_uniform() { return {ParamSchemeKind::OpinionUniform}; }
  static ParamScheme opinion_normal() { return {ParamSchemeKind::OpinionNormal}; }
  static ParamScheme phi_uniform() { return {ParamSchemeKind::PhiUniform}; }
};

/// Returns a copy of `g` with the scheme's field overwritten. Pure function
/// of (g, scheme, seed): two calls yield bit-identical graphs. Random draws
/// are consumed in node id / edge id order.
Graph assign_parameters(const Graph& g, const ParamScheme& scheme,
                        std::uint64_t rng_seed);

}  // namespace infmax
