#pragma once

#include <span>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

// Ground truth: per-node exact distance sums from n Dijkstra runs. The
// centrality value is (n-1)/S(v); S is kept as the integer it is.
struct ExactCentrality {
  std::vector<Dist> sum;  // S(v) = sum over u of d(v,u)

  double centrality(NodeId v) const {
    return static_cast<double>(sum.size() - 1) / static_cast<double>(sum[v]);
  }
};

// Undirected connected graphs only; throws std::invalid_argument otherwise.
// Sources are independent, so they may be computed on `threads` threads;
// results do not depend on the thread count.
ExactCentrality exact_all(const Graph& g, unsigned threads = 1);

// S_beta(v) = sum over j != v of beta(j) * d(v,j). Accumulated in Dijkstra
// settlement order, which the weighted estimators share for their exact
// branch. Throws on negative weights or disconnected input.
std::vector<double> exact_weighted_all(const Graph& g, std::span<const double> beta,
                                       unsigned threads = 1);

// Per-source distance sums on a digraph where every node reaches every other
// (checked); used for round-trip ground truth via sums on g and g transposed.
std::vector<Dist> exact_directed_sums(const Graph& g, unsigned threads = 1);

}  // namespace ccent
