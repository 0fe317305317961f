#include "ccent/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ccent/directed.hpp"
#include "ccent/estimators.hpp"
#include "ccent/exact.hpp"
#include "ccent/rng.hpp"
#include "ccent/varopt.hpp"
#include "ccent/weighted.hpp"

namespace ccent {

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<NodeId> pick_queries(NodeId n, std::size_t queries, std::uint64_t seed) {
  if (queries >= n) {
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  Rng rng = make_stream(seed, "eval-queries");
  std::unordered_map<std::size_t, NodeId> displaced;
  auto slot = [&](std::size_t i) -> NodeId {
    auto it = displaced.find(i);
    return it != displaced.end() ? it->second : static_cast<NodeId>(i);
  };
  std::vector<NodeId> out;
  out.reserve(queries);
  for (std::size_t i = 0; i < queries; ++i) {
    const std::size_t j = i + rng.next_below(n - i);
    out.push_back(slot(j));
    displaced[j] = slot(i);
  }
  return out;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kExact: return "exact";
    case Method::kSampling: return "sampling";
    case Method::kPivoting: return "pivoting";
    case Method::kPivotingUb: return "pivoting-ub";
    case Method::kHybrid: return "hybrid";
    case Method::kAdaptiveGrid: return "adaptive";
    case Method::kAdaptiveSweep: return "adaptive-sweep";
    case Method::kWeightedHybrid: return "weighted-hybrid";
    case Method::kRoundtrip: return "roundtrip";
  }
  return "?";
}

std::optional<Method> method_from_string(const std::string& name) {
  for (const Method m :
       {Method::kExact, Method::kSampling, Method::kPivoting, Method::kPivotingUb,
        Method::kHybrid, Method::kAdaptiveGrid, Method::kAdaptiveSweep, Method::kWeightedHybrid,
        Method::kRoundtrip}) {
    if (name == method_name(m)) return m;
  }
  return std::nullopt;
}

std::vector<Dist> exact_roundtrip_sums(const Graph& g, unsigned threads) {
  const std::vector<Dist> fwd = exact_directed_sums(g, threads);
  const std::vector<Dist> bwd = exact_directed_sums(g.transposed(), threads);
  std::vector<Dist> out(fwd.size());
  for (NodeId v = 0; v < fwd.size(); ++v) out[v] = fwd[v] + bwd[v];
  return out;
}

EvalReport evaluate(const Graph& g, const std::string& graph_name, const EvalOptions& opts) {
  const NodeId n = g.num_nodes();
  if (n < 2) throw std::invalid_argument("evaluation needs at least two nodes");
  if (n > opts.oracle_cap && !opts.ignore_oracle_cap)
    throw std::invalid_argument("graph exceeds the exact-oracle cap (" + std::to_string(n) +
                                " > " + std::to_string(opts.oracle_cap) +
                                "); pass --no-oracle-cap to override");

  EvalReport r;
  r.method = method_name(opts.method);
  r.graph = graph_name;
  r.n = n;
  r.m = g.num_edges();
  r.k = opts.k;
  r.eps = opts.eps > 0 ? opts.eps : default_eps(opts.k);
  r.seed = opts.seed;

  // Exact truth.
  double t0 = now_ms();
  std::vector<double> truth(n);
  if (opts.method == Method::kRoundtrip) {
    const std::vector<Dist> s = exact_roundtrip_sums(g, opts.threads);
    for (NodeId v = 0; v < n; ++v) truth[v] = static_cast<double>(s[v]);
  } else if (opts.method == Method::kWeightedHybrid) {
    if (opts.beta.size() != n) throw std::invalid_argument("weighted evaluation needs beta");
    truth = exact_weighted_all(g, opts.beta, opts.threads);
  } else {
    const ExactCentrality ex = exact_all(g, opts.threads);
    for (NodeId v = 0; v < n; ++v) truth[v] = static_cast<double>(ex.sum[v]);
  }
  r.oracle_millis = now_ms() - t0;

  // Estimates.
  t0 = now_ms();
  std::vector<double> est(n);
  switch (opts.method) {
    case Method::kExact:
      est = truth;
      break;
    case Method::kSampling:
      est = estimate_sampling(g, sample_uniform(g, opts.k, opts.seed)).sum_est;
      break;
    case Method::kPivoting:
      est = estimate_pivoting(g, sample_uniform(g, opts.k, opts.seed), PivotingVariant::kPlain)
                .sum_est;
      break;
    case Method::kPivotingUb:
      est = estimate_pivoting(g, sample_uniform(g, opts.k, opts.seed),
                              PivotingVariant::kUpperBound)
                .sum_est;
      break;
    case Method::kHybrid:
      est = estimate_hybrid(g, sample_uniform(g, opts.k, opts.seed), r.eps).sum_est;
      break;
    case Method::kAdaptiveGrid: {
      const auto& grid = opts.grid.empty()
                             ? std::vector<double>(std::begin(kDefaultEpsGrid),
                                                   std::end(kDefaultEpsGrid))
                             : opts.grid;
      est = estimate_adaptive_grid(g, sample_uniform(g, opts.k, opts.seed), grid).sum_est;
      break;
    }
    case Method::kAdaptiveSweep:
      est = estimate_adaptive_sweep(g, sample_uniform(g, opts.k, opts.seed)).sum_est;
      break;
    case Method::kWeightedHybrid:
      est = estimate_weighted_hybrid(g, opts.beta, varopt_sample(opts.beta, opts.k, opts.seed),
                                     r.eps)
                .sum_est;
      break;
    case Method::kRoundtrip:
      est = roundtrip_hybrid(g, opts.k, opts.seed, r.eps).sum_est;
      break;
  }
  r.est_millis = now_ms() - t0;

  r.query_nodes = pick_queries(n, opts.queries, opts.seed);
  for (const NodeId v : r.query_nodes) {
    const double s = truth[v];
    const double e = est[v];
    r.exact_sum.push_back(s);
    r.est_sum.push_back(e);
    if (s > 0) {
      r.rel_err.push_back(std::abs(e - s) / s);
    } else {
      r.rel_err.push_back(e == 0 ? 0.0 : std::numeric_limits<double>::infinity());
    }
  }
  r.sorted_err = r.rel_err;
  std::sort(r.sorted_err.begin(), r.sorted_err.end());

  double sum = 0, sum_sq = 0;
  for (const double e : r.rel_err) {
    sum += e;
    sum_sq += e * e;
  }
  r.avg_rel_err = sum / static_cast<double>(r.rel_err.size());
  r.nrmse = std::sqrt(sum_sq / static_cast<double>(r.rel_err.size()));
  return r;
}

std::vector<SweepRow> nrmse_sweep(const Graph& g, std::span<const std::size_t> k_values,
                                  std::size_t num_seeds, std::uint64_t seed, unsigned threads) {
  const NodeId n = g.num_nodes();
  const ExactCentrality ex = exact_all(g, threads);
  std::vector<SweepRow> rows;
  for (const std::size_t k : k_values) {
    const double eps = default_eps(k);
    double sum_sq = 0;
    std::size_t cnt = 0;
    for (std::size_t s = 0; s < num_seeds; ++s) {
      const EstimateTable t = estimate_hybrid(g, sample_uniform(g, k, seed + s), eps);
      for (NodeId v = 0; v < n; ++v) {
        const double rel =
            (t.sum_est[v] - static_cast<double>(ex.sum[v])) / static_cast<double>(ex.sum[v]);
        sum_sq += rel * rel;
        ++cnt;
      }
    }
    SweepRow row{k, eps, std::sqrt(sum_sq / static_cast<double>(cnt)), true};
    if (!rows.empty()) row.non_increasing = row.nrmse <= rows.back().nrmse * 1.10;
    rows.push_back(row);
  }
  return rows;
}

void write_report_csv(const EvalReport& r, std::ostream& out, const IdMap* ids) {
  out << "node_id,exact_S,est_S,rel_err\n";
  for (std::size_t i = 0; i < r.query_nodes.size(); ++i) {
    const NodeId v = r.query_nodes[i];
    const std::int64_t shown = ids ? ids->input_id(v) : static_cast<std::int64_t>(v);
    out << shown << ',' << fmt_double(r.exact_sum[i]) << ',' << fmt_double(r.est_sum[i]) << ','
        << fmt_double(r.rel_err[i]) << '\n';
  }
}

void write_cdf_csv(const EvalReport& r, std::ostream& out) {
  out << "rank,rel_err\n";
  for (std::size_t i = 0; i < r.sorted_err.size(); ++i)
    out << (i + 1) << ',' << fmt_double(r.sorted_err[i]) << '\n';
}

void write_summary(const EvalReport& r, std::ostream& out) {
  out << "method=" << r.method << '\n'
      << "graph=" << r.graph << '\n'
      << "n=" << r.n << '\n'
      << "m=" << r.m << '\n'
      << "k=" << r.k << '\n'
      << "eps=" << fmt_double(r.eps) << '\n'
      << "seed=" << r.seed << '\n'
      << "queries=" << r.query_nodes.size() << '\n'
      << "avg_rel_err=" << fmt_double(r.avg_rel_err) << '\n'
      << "nrmse=" << fmt_double(r.nrmse) << '\n'
      << "est_ms=" << fmt_double(r.est_millis) << '\n'
      << "oracle_ms=" << fmt_double(r.oracle_millis) << '\n';
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << "k,eps,nrmse,non_increasing\n";
  for (const SweepRow& row : rows)
    out << row.k << ',' << fmt_double(row.eps) << ',' << fmt_double(row.nrmse) << ','
        << (row.non_increasing ? 1 : 0) << '\n';
}

}  // namespace ccent
