#pragma once

#include <span>

#include "ccent/estimate_table.hpp"
#include "ccent/graph.hpp"
#include "ccent/hybrid_core.hpp"
#include "ccent/varopt.hpp"

namespace ccent {

// Hybrid estimator for the weighted distance sum S_beta(v) = sum over u != v
// of beta(u) d(v,u), driven by a VarOpt sample. Pivot contributions are
// weighted by beta, sampled below-threshold contributions by the adjusted
// weight beta_hat (inverse probability), and error bookkeeping uses total
// beta masses instead of cardinalities.
EstimateTable estimate_weighted_hybrid(const Graph& g, std::span<const double> beta,
                                       const WeightedSample& sample, double eps);

HybridAccumulator::Result estimate_weighted_hybrid_detail(const Graph& g,
                                                          std::span<const double> beta,
                                                          const WeightedSample& sample,
                                                          double eps);

}  // namespace ccent
