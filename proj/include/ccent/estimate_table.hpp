#pragma once

#include <cstdint>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

// Per-node estimate of the distance sum S(v), the derived centrality value
// (n-1)/S(v), and an estimate of the squared error of the sum estimate.
// exact[v] is set when v was sampled, in which case sum_est[v] is S(v)
// exactly and sqerr_est[v] is 0.
struct EstimateTable {
  std::vector<double> sum_est;
  std::vector<double> sqerr_est;
  std::vector<std::uint8_t> exact;

  std::size_t size() const { return sum_est.size(); }

  double centrality(NodeId v) const {
    return static_cast<double>(sum_est.size() - 1) / sum_est[v];
  }
};

}  // namespace ccent
