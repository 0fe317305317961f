#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ccent/estimate_table.hpp"
#include "ccent/graph.hpp"
#include "ccent/hybrid_core.hpp"
#include "ccent/sampling.hpp"

namespace ccent {

// The experiments' default threshold parameter for a given sample size.
inline double default_eps(std::size_t k) { return std::sqrt(1.0 / static_cast<double>(k)); }

// Default grid for the grid-adaptive estimator.
inline constexpr double kDefaultEpsGrid[] = {0.001, 0.025, 0.05, 0.1, 0.2, 0.5, 0.99};

enum class PivotingVariant { kPlain, kUpperBound };

// S_hat(v) = (n-1)/k * sum of distances to the sample; exact for sampled
// nodes. Error estimate: (n-1)^2/k * population variance of the k distances.
EstimateTable estimate_sampling(const Graph& g, const SampleSet& sample);

// S_hat(v) = S(c(v)), optionally + (n-1) * Delta(v). No error estimate is
// defined for pivoting; sqerr_est is 0.
EstimateTable estimate_pivoting(const Graph& g, const SampleSet& sample, PivotingVariant variant);

// Streaming hybrid estimator (k+1 shortest-path passes, O(1) state per node
// beyond the bounded fallback buffer).
EstimateTable estimate_hybrid(const Graph& g, const SampleSet& sample, double eps);

// Same, with partition diagnostics for tests.
HybridAccumulator::Result estimate_hybrid_detail(const Graph& g, const SampleSet& sample,
                                                 double eps);

// Per node, the hybrid estimate over the given eps grid with the smallest
// estimated squared error (first grid entry wins ties).
EstimateTable estimate_adaptive_grid(const Graph& g, const SampleSet& sample,
                                     std::span<const double> eps_grid);

// Per node, sweeps the k thresholds d(c(v), c_j) from pure pivoting toward
// pure sampling and keeps the estimate with the smallest estimated error.
// Uses O(n*k) memory.
EstimateTable estimate_adaptive_sweep(const Graph& g, const SampleSet& sample);

}  // namespace ccent
