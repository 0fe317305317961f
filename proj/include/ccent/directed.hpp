#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ccent/estimate_table.hpp"
#include "ccent/graph.hpp"

namespace ccent {

// Hybrid estimator in the round-trip metric d(u,v) + d(v,u) of a strongly
// connected digraph: one forward and one backward shortest-path run per
// sampled node, then the usual partition with nodes ordered by increasing
// round-trip distance from the pivot. sum_est estimates
// sum over u of (d(v,u) + d(u,v)). Throws (naming an unreachable pair) when
// the graph is not strongly connected.
EstimateTable roundtrip_hybrid(const Graph& g, std::size_t k, std::uint64_t seed, double eps);

enum class ReachDirection { kOutbound, kInbound };

struct ReachOptions {
  bool prune = true;            // test hook: disable search pruning
  bool collect_samples = false; // test hook: record per-node collected (source, dist)
};

// Per-node average distance to the reachable set and estimated cardinality
// of that set, from pruned searches seeded in random node order. Nodes
// collecting fewer than k samples get exact values (exact flag set).
struct ReachabilityEstimate {
  std::vector<double> avg_dist;   // 0 when nothing is reachable
  std::vector<double> reach_est;
  std::vector<std::uint32_t> count;
  std::vector<std::uint8_t> exact;
  std::uint64_t total_scans = 0;  // settled nodes across all searches
  std::vector<std::vector<std::pair<NodeId, Dist>>> samples;  // when collect_samples
};

// Requires k >= 3. Stream "reach-order" drives the processing permutation.
ReachabilityEstimate reachability_estimate(const Graph& g, std::size_t k, std::uint64_t seed,
                                           ReachDirection direction, ReachOptions opts = {});

// Weighted variant: nodes are ranked by uniform(0,1)/beta and processed in
// increasing rank; per node the first k-1 collected samples accumulate
// beta-weighted sums and the k-th sample's rank calibrates the bottom-k
// estimates sum_est = distsum/T and reach_est = (k-1)/T.
struct WeightedReachabilityEstimate {
  std::vector<double> sum_est;    // beta-weighted distance sum to the reachable set
  std::vector<double> reach_est;  // beta-weighted reachable mass
  std::vector<std::uint32_t> count;
  std::vector<std::uint8_t> exact;
  std::uint64_t total_scans = 0;
  std::vector<double> rank;       // rank per node; infinity for beta <= 0
  std::vector<std::vector<std::pair<NodeId, Dist>>> samples;
};

// Requires k >= 2 and at least one positive weight. Stream "reach-ranks".
WeightedReachabilityEstimate weighted_reachability_estimate(const Graph& g,
                                                            std::span<const double> beta,
                                                            std::size_t k, std::uint64_t seed,
                                                            ReachDirection direction,
                                                            ReachOptions opts = {});

}  // namespace ccent
