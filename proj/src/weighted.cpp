#include "ccent/weighted.hpp"

#include <stdexcept>

#include "ccent/components.hpp"
#include "ccent/dijkstra.hpp"

namespace ccent {

HybridAccumulator::Result estimate_weighted_hybrid_detail(const Graph& g,
                                                          std::span<const double> beta,
                                                          const WeightedSample& sample,
                                                          double eps) {
  if (g.directed()) throw std::invalid_argument("estimator requires an undirected graph");
  if (beta.size() != g.num_nodes()) throw std::invalid_argument("weight vector size mismatch");
  for (const double b : beta)
    if (b < 0) throw std::invalid_argument("negative node weight");
  if (auto pair = find_disconnected_pair(g))
    throw std::invalid_argument("graph is disconnected: no path between nodes " +
                                std::to_string(pair->first) + " and " +
                                std::to_string(pair->second) +
                                " (apply largest_component first)");
  for (const NodeId c : sample.nodes)
    if (beta[c] <= 0) throw std::invalid_argument("sampled node with non-positive weight");

  const PivotAssignment pivots = multi_source_sssp(g, sample.nodes);
  HybridAccumulator acc(g.num_nodes(), sample.nodes, pivots, eps, beta, sample.adjusted,
                        sample.tau);
  std::vector<Dist> dist;
  for (SampleIndex i = 0; i < sample.k(); ++i) {
    acc.begin_pass(i);
    sssp_visit(g, sample.nodes[i], dist,
               [&](NodeId u, Dist d, std::uint32_t) { acc.visit(u, d); });
    acc.end_pass();
  }
  return std::move(acc).finalize();
}

EstimateTable estimate_weighted_hybrid(const Graph& g, std::span<const double> beta,
                                       const WeightedSample& sample, double eps) {
  return estimate_weighted_hybrid_detail(g, beta, sample, eps).table;
}

}  // namespace ccent
