#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ccent/graph.hpp"
#include "ccent/graph_io.hpp"

namespace ccent {

enum class Method {
  kExact,
  kSampling,
  kPivoting,
  kPivotingUb,
  kHybrid,
  kAdaptiveGrid,
  kAdaptiveSweep,
  kWeightedHybrid,
  kRoundtrip,
};

const char* method_name(Method m);
std::optional<Method> method_from_string(const std::string& name);

struct EvalOptions {
  Method method = Method::kHybrid;
  std::size_t k = 100;
  double eps = 0.0;          // 0 -> sqrt(1/k)
  std::vector<double> grid;  // empty -> default grid (grid-adaptive only)
  std::size_t queries = 1000;
  std::uint64_t seed = 1;
  NodeId oracle_cap = 20000;
  bool ignore_oracle_cap = false;
  unsigned threads = 1;
  std::vector<double> beta;  // weighted-hybrid only
};

// Relative error is measured on the sum estimate: |S_hat - S| / S.
struct EvalReport {
  std::string method;
  std::string graph;
  NodeId n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;

  std::vector<NodeId> query_nodes;  // internal ids, query order
  std::vector<double> exact_sum;
  std::vector<double> est_sum;
  std::vector<double> rel_err;
  std::vector<double> sorted_err;  // ascending; the cumulative distribution

  double avg_rel_err = 0.0;
  double nrmse = 0.0;
  double est_millis = 0.0;
  double oracle_millis = 0.0;
};

// Runs the method against the exact oracle on `queries` distinct random
// nodes (all nodes when queries >= n). Throws when n exceeds the oracle cap
// unless ignore_oracle_cap is set.
EvalReport evaluate(const Graph& g, const std::string& graph_name, const EvalOptions& opts);

struct SweepRow {
  std::size_t k;
  double eps;
  double nrmse;      // over all nodes and seeds
  bool non_increasing;  // within 10% noise of the previous row
};

// NRMSE of the hybrid estimator with eps = sqrt(1/k) for each k, over all
// nodes and `num_seeds` seeded runs (seed, seed+1, ...).
std::vector<SweepRow> nrmse_sweep(const Graph& g, std::span<const std::size_t> k_values,
                                  std::size_t num_seeds, std::uint64_t seed,
                                  unsigned threads = 1);

// CSV with one row per query (query order); ids mapped through `ids` when
// given. Timing never appears in these bodies.
void write_report_csv(const EvalReport& r, std::ostream& out, const IdMap* ids = nullptr);
// Cumulative distribution: i-th row carries the i-th smallest error.
void write_cdf_csv(const EvalReport& r, std::ostream& out);
// key=value block; includes timing lines (est_ms, oracle_ms).
void write_summary(const EvalReport& r, std::ostream& out);

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

// Round-trip distance sums per node of a strongly connected digraph.
std::vector<Dist> exact_roundtrip_sums(const Graph& g, unsigned threads = 1);

}  // namespace ccent
