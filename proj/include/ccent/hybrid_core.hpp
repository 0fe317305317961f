#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccent/dijkstra.hpp"
#include "ccent/estimate_table.hpp"
#include "ccent/graph.hpp"

namespace ccent {

using SampleIndex = std::uint32_t;
inline constexpr SampleIndex kNoSample = std::numeric_limits<SampleIndex>::max();

// Streaming accumulator for the hybrid estimator. One instance consumes k
// passes, one per sampled node, each delivering every node exactly once in
// non-decreasing distance order (ties in ascending node id) -- Dijkstra
// settlement order for graph metrics, explicitly sorted order for round-trip
// distances. Per-node state is a fixed set of scalars plus the bounded
// fallback buffer; deferred entries and threshold bins live only for the
// duration of a pass.
//
// Per node v outside the sample, with pivot c(v), pivot distance Delta(v),
// and threshold T(v) = Delta(v)/eps, each sampled node lands in L(v) when
// its distance from c(v) is <= T(v) (strictly greater goes to HC(v)), and
// every unsampled node u != v with d(c(v),u) > T(v) forms H(v). The final
// estimate is
//
//   S_hat(v) = sum_{u in H} d(c(v),u) + sum_{u in HC} d(v,u)
//            + |L|/|L cap C| * sum_{u in L cap C} d(v,u)
//
// with the squared-error estimate
//
//   |L|/|L cap C| * pop_var(L cap C distances) + |H| * mean_{HC}(d(v,u) - d(c(v),u))^2.
//
// When HC(v) is empty the pivot-error mean falls back to the ceil(k/4)
// sampled nodes farthest from v (ties toward smaller sample node id).
//
// In weighted mode the same partition applies, with contributions
//   HC: beta(c_i) * d,    L: beta_adj(c_i) * d,    H: beta(u) * d(c(v),u),
// inverse-probability variance bookkeeping d^2 (tau - beta(c_i)) tau for
// below-threshold samples in L, and set cardinalities replaced by total
// beta weight in the error estimate.
class HybridAccumulator {
 public:
  struct Result {
    EstimateTable table;
    // Partition diagnostics (counts, not weights), for v outside the sample.
    std::vector<std::uint64_t> l_num, lc_num, hc_num, h_num;
  };

  // Unweighted.
  HybridAccumulator(NodeId n, std::span<const NodeId> sample, const PivotAssignment& pivots,
                    double eps);
  // Weighted: beta per node, adjusted weight per sample, VarOpt threshold tau.
  HybridAccumulator(NodeId n, std::span<const NodeId> sample, const PivotAssignment& pivots,
                    double eps, std::span<const double> beta, std::span<const double> beta_adj,
                    double tau);

  void begin_pass(SampleIndex i);
  void visit(NodeId u, Dist d);
  void end_pass();

  Result finalize() &&;

 private:
  void account_l(NodeId v, Dist d);
  void account_hc(NodeId v, Dist d, Dist pivot_dist);
  void fallback_insert(NodeId v, Dist d);
  double fallback_mean(NodeId v) const;

  NodeId n_ = 0;
  SampleIndex k_ = 0;
  double eps_ = 0;
  bool weighted_ = false;
  double tau_ = 0;

  std::vector<NodeId> sample_nodes_;
  std::vector<double> beta_;        // weighted mode
  std::vector<double> beta_adj_;    // weighted mode, per sample
  std::vector<SampleIndex> sample_idx_of_;  // node -> sample index or kNoSample
  std::vector<SampleIndex> pivot_idx_;      // node -> sample index of its pivot
  std::vector<Dist> pivot_dist_;            // Delta(v)
  std::vector<double> threshold_;           // T(v) = Delta(v)/eps

  // Persistent accumulators.
  std::vector<Dist> s_exact_;          // per sample, unweighted
  std::vector<double> s_exact_w_;      // per sample, weighted
  std::vector<Dist> delta_;            // k x k inter-sample distances
  std::vector<Dist> lc_sum_;
  std::vector<std::uint32_t> lc_cnt_;
  std::vector<double> lc_sum_sq_;
  std::vector<Dist> hc_sum_;
  std::vector<double> hc_sqerr_;
  std::vector<Dist> h_sum_;
  std::vector<std::uint64_t> h_cnt_;
  std::vector<double> lcw_sum_, var_est_, hcw_sum_, hcw_sqerr_, hc_beta_, hw_sum_, h_beta_;

  // Fallback buffer: per node, the fb_width_ farthest samples seen so far.
  std::uint32_t fb_width_ = 1;
  std::vector<Dist> fb_dist_;
  std::vector<SampleIndex> fb_sample_;
  std::vector<std::uint32_t> fb_cnt_;

  // Pass-scoped state.
  struct Deferred {
    NodeId node;
    Dist d;
  };
  SampleIndex pass_ = kNoSample;
  std::uint64_t visits_ = 0;
  double pass_beta_ = 0, pass_beta_adj_ = 0, pass_var_coef_ = 0;
  std::vector<SampleIndex> last_pass_;  // per sample: pass in which it settled
  std::vector<Dist> dist_c_;            // per sample: its distance in that pass
  std::vector<std::vector<Deferred>> lists_;
  std::vector<double> thresh_;               // [0] is a sentinel
  std::vector<std::vector<NodeId>> thresh_nodes_;
  std::vector<Dist> bin_sum_;
  std::vector<std::uint64_t> bin_cnt_;
  std::vector<double> bin_wsum_, bin_beta_;
  std::size_t curt_ = 0;
};

}  // namespace ccent
