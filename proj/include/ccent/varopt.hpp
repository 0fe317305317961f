#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

// Threshold sample of exactly k nodes: node v is included with probability
// min{1, beta(v)/tau}, where tau solves sum_v min{1, beta(v)/tau} = k.
// Sampled nodes carry the adjusted (inverse-probability) weight
// beta_hat(v) = max{tau, beta(v)}.
struct WeightedSample {
  std::vector<NodeId> nodes;     // id-ascending
  std::vector<double> adjusted;  // beta_hat per sampled node
  double tau = 0.0;
  std::uint64_t seed = 0;

  std::size_t k() const { return nodes.size(); }
};

// Requires at least k strictly positive weights. The threshold split is
// resolved with exact integer arithmetic when all weights are integers.
// Sub-threshold nodes are drawn by systematic PPS sampling in node-id order
// (one uniform draw, stream "varopt"), which yields exactly k - |heavy|
// picks with the required inclusion probabilities.
WeightedSample varopt_sample(std::span<const double> beta, std::size_t k, std::uint64_t seed);

}  // namespace ccent
