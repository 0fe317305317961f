#include "ccent/estimators.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "ccent/components.hpp"
#include "ccent/dijkstra.hpp"

namespace ccent {

namespace {

void require_undirected_connected(const Graph& g) {
  if (g.directed())
    throw std::invalid_argument("estimator requires an undirected graph");
  if (auto pair = find_disconnected_pair(g))
    throw std::invalid_argument("graph is disconnected: no path between nodes " +
                                std::to_string(pair->first) + " and " +
                                std::to_string(pair->second) +
                                " (apply largest_component first)");
}

unsigned __int128 sq_diff(Dist a, Dist b) {
  const Dist m = a > b ? a - b : b - a;
  return static_cast<unsigned __int128>(m) * m;
}

void require_valid_sample(const Graph& g, const SampleSet& sample) {
  if (sample.nodes.empty()) throw std::invalid_argument("empty sample");
  std::vector<std::uint8_t> seen(g.num_nodes(), 0);
  for (const NodeId c : sample.nodes) {
    if (c >= g.num_nodes()) throw std::invalid_argument("sampled node out of range");
    if (seen[c]++) throw std::invalid_argument("duplicate sampled node");
  }
}

}  // namespace

EstimateTable estimate_sampling(const Graph& g, const SampleSet& sample) {
  require_undirected_connected(g);
  require_valid_sample(g, sample);
  const NodeId n = g.num_nodes();
  const std::size_t k = sample.k();

  std::vector<Dist> sum_d(n, 0);
  std::vector<double> sum_d2(n, 0.0);
  std::vector<Dist> s_exact(k, 0);
  std::vector<Dist> dist;
  for (std::size_t i = 0; i < k; ++i) {
    sssp_visit(g, sample.nodes[i], dist, [&](NodeId u, Dist d, std::uint32_t) {
      s_exact[i] += d;
      sum_d[u] += d;
      sum_d2[u] += static_cast<double>(d) * static_cast<double>(d);
    });
  }

  EstimateTable out;
  out.sum_est.assign(n, 0.0);
  out.sqerr_est.assign(n, 0.0);
  out.exact.assign(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    out.sum_est[sample.nodes[i]] = static_cast<double>(s_exact[i]);
    out.exact[sample.nodes[i]] = 1;
  }
  const double scale = static_cast<double>(n - 1) / static_cast<double>(k);
  for (NodeId v = 0; v < n; ++v) {
    if (out.exact[v]) continue;
    out.sum_est[v] = static_cast<double>(sum_d[v]) * scale;
    const double mean = static_cast<double>(sum_d[v]) / static_cast<double>(k);
    const double var =
        std::max(0.0, sum_d2[v] / static_cast<double>(k) - mean * mean);
    out.sqerr_est[v] = static_cast<double>(n - 1) * static_cast<double>(n - 1) /
                       static_cast<double>(k) * var;
  }
  return out;
}

EstimateTable estimate_pivoting(const Graph& g, const SampleSet& sample,
                                PivotingVariant variant) {
  require_undirected_connected(g);
  require_valid_sample(g, sample);
  const NodeId n = g.num_nodes();
  const std::size_t k = sample.k();

  const PivotAssignment pivots = multi_source_sssp(g, sample.nodes);
  std::vector<SampleIndex> sidx(n, kNoSample);
  for (std::size_t i = 0; i < k; ++i) sidx[sample.nodes[i]] = static_cast<SampleIndex>(i);

  std::vector<Dist> s_exact(k, 0);
  std::vector<Dist> dist;
  for (std::size_t i = 0; i < k; ++i)
    sssp_visit(g, sample.nodes[i], dist,
               [&](NodeId, Dist d, std::uint32_t) { s_exact[i] += d; });

  EstimateTable out;
  out.sum_est.assign(n, 0.0);
  out.sqerr_est.assign(n, 0.0);
  out.exact.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (sidx[v] != kNoSample) {
      out.sum_est[v] = static_cast<double>(s_exact[sidx[v]]);
      out.exact[v] = 1;
      continue;
    }
    const SampleIndex pj = sidx[pivots.pivot[v]];
    out.sum_est[v] = static_cast<double>(s_exact[pj]);
    if (variant == PivotingVariant::kUpperBound)
      out.sum_est[v] += static_cast<double>(n - 1) * static_cast<double>(pivots.dist[v]);
  }
  return out;
}

HybridAccumulator::Result estimate_hybrid_detail(const Graph& g, const SampleSet& sample,
                                                 double eps) {
  require_undirected_connected(g);
  require_valid_sample(g, sample);
  const PivotAssignment pivots = multi_source_sssp(g, sample.nodes);
  HybridAccumulator acc(g.num_nodes(), sample.nodes, pivots, eps);
  std::vector<Dist> dist;
  for (SampleIndex i = 0; i < sample.k(); ++i) {
    acc.begin_pass(i);
    sssp_visit(g, sample.nodes[i], dist,
               [&](NodeId u, Dist d, std::uint32_t) { acc.visit(u, d); });
    acc.end_pass();
  }
  return std::move(acc).finalize();
}

EstimateTable estimate_hybrid(const Graph& g, const SampleSet& sample, double eps) {
  return estimate_hybrid_detail(g, sample, eps).table;
}

EstimateTable estimate_adaptive_grid(const Graph& g, const SampleSet& sample,
                                     std::span<const double> eps_grid) {
  if (eps_grid.empty()) throw std::invalid_argument("empty eps grid");
  EstimateTable best;
  bool first = true;
  for (const double eps : eps_grid) {
    EstimateTable t = estimate_hybrid(g, sample, eps);
    if (first) {
      best = std::move(t);
      first = false;
      continue;
    }
    for (NodeId v = 0; v < best.size(); ++v) {
      if (best.exact[v]) continue;
      if (t.sqerr_est[v] < best.sqerr_est[v]) {
        best.sqerr_est[v] = t.sqerr_est[v];
        best.sum_est[v] = t.sum_est[v];
      }
    }
  }
  return best;
}

EstimateTable estimate_adaptive_sweep(const Graph& g, const SampleSet& sample) {
  require_undirected_connected(g);
  require_valid_sample(g, sample);
  const NodeId n = g.num_nodes();
  const std::size_t k = sample.k();
  using U128 = unsigned __int128;

  const PivotAssignment pivots = multi_source_sssp(g, sample.nodes);
  std::vector<SampleIndex> sidx(n, kNoSample);
  for (std::size_t i = 0; i < k; ++i) sidx[sample.nodes[i]] = static_cast<SampleIndex>(i);

  // k passes: the full distance matrix (row per sample), exact sums, and per
  // (sample row, threshold sample) tail counts/sums over unsampled nodes.
  std::vector<Dist> D(static_cast<std::size_t>(n) * k, kInfDist);
  std::vector<Dist> delta(k * k, kInfDist);  // delta[i*k+j] = d(c_i, c_j)
  std::vector<Dist> s_exact(k, 0);
  std::vector<std::uint64_t> tail_cnt(k * k, 0);
  std::vector<Dist> tail_sum(k * k, 0);

  std::vector<Dist> dist;
  std::vector<Dist> settled;   // unsampled distances in settlement order (sorted)
  std::vector<Dist> prefix;    // prefix sums of `settled`
  for (std::size_t i = 0; i < k; ++i) {
    settled.clear();
    std::uint32_t visited = 0;
    sssp_visit(g, sample.nodes[i], dist, [&](NodeId u, Dist d, std::uint32_t) {
      ++visited;
      s_exact[i] += d;
      D[static_cast<std::size_t>(u) * k + i] = d;
      if (sidx[u] != kNoSample) {
        delta[i * k + sidx[u]] = d;
      } else {
        settled.push_back(d);
      }
    });
    assert(visited == n);
    prefix.assign(settled.size() + 1, 0);
    for (std::size_t x = 0; x < settled.size(); ++x) prefix[x + 1] = prefix[x] + settled[x];
    for (std::size_t j = 0; j < k; ++j) {
      const auto it = std::upper_bound(settled.begin(), settled.end(), delta[i * k + j]);
      const std::size_t at = static_cast<std::size_t>(it - settled.begin());
      tail_cnt[i * k + j] = settled.size() - at;
      tail_sum[i * k + j] = prefix.back() - prefix[at];
    }
  }

  // Threshold scan order per pivot: samples by (distance from pivot, id).
  std::vector<SampleIndex> order(k * k);
  for (std::size_t j = 0; j < k; ++j) {
    SampleIndex* row = order.data() + j * k;
    std::iota(row, row + k, 0);
    std::sort(row, row + k, [&](SampleIndex a, SampleIndex b) {
      const Dist da = delta[j * k + a], db = delta[j * k + b];
      return da != db ? da < db : sample.nodes[a] < sample.nodes[b];
    });
  }

  const std::uint32_t fb_width =
      static_cast<std::uint32_t>(std::max<std::size_t>(1, (k + 3) / 4));
  std::vector<SampleIndex> far(k);

  EstimateTable out;
  out.sum_est.assign(n, 0.0);
  out.sqerr_est.assign(n, 0.0);
  out.exact.assign(n, 0);

  for (NodeId v = 0; v < n; ++v) {
    if (sidx[v] != kNoSample) {
      out.sum_est[v] = static_cast<double>(s_exact[sidx[v]]);
      out.exact[v] = 1;
      continue;
    }
    const SampleIndex pj = sidx[pivots.pivot[v]];
    const Dist* d_v = D.data() + static_cast<std::size_t>(v) * k;
    assert(d_v[pj] == pivots.dist[v]);

    Dist hc_sum = 0;
    U128 hc_sqerr = 0;
    for (std::size_t i = 0; i < k; ++i) {
      hc_sum += d_v[i];
      hc_sqerr += sq_diff(d_v[i], delta[pj * k + i]);
    }

    // Start from the pure-pivot estimate, errors taken over all k samples.
    double best_sum = static_cast<double>(s_exact[pj]);
    double best_err = static_cast<double>(hc_sqerr) / static_cast<double>(k) *
                      static_cast<double>(n - 1 - k);

    Dist lc_sum = 0;
    U128 lc_sum_sq = 0;
    for (std::size_t idx = 1; idx <= k; ++idx) {
      const SampleIndex i = order[pj * k + (idx - 1)];
      const Dist t = delta[pj * k + i];
      const Dist d = d_v[i];
      lc_sum += d;
      lc_sum_sq += static_cast<U128>(d) * d;
      hc_sum -= d;
      hc_sqerr -= sq_diff(d, t);

      const std::uint64_t lc_num = idx;
      const std::uint64_t hc_num = k - idx;
      std::uint64_t h_num = tail_cnt[pj * k + i];
      Dist h_sum = tail_sum[pj * k + i];
      if (d_v[pj] > t) {  // v itself is beyond this threshold
        h_num -= 1;
        h_sum -= d_v[pj];
      }
      const std::uint64_t l_num = (n - 1) - h_num - hc_num;

      const double est = static_cast<double>(lc_sum) *
                             (static_cast<double>(l_num) / static_cast<double>(lc_num)) +
                         static_cast<double>(hc_sum) + static_cast<double>(h_sum);
      const double lc_mean = static_cast<double>(lc_sum) / static_cast<double>(lc_num);
      const double lvar = std::max(
          0.0, static_cast<double>(lc_sum_sq) / static_cast<double>(lc_num) - lc_mean * lc_mean);
      const double lterm = lvar / static_cast<double>(lc_num) * static_cast<double>(l_num);
      double hterm = 0.0;
      if (h_num > 0) {
        double hmean;
        if (hc_num > 0) {
          hmean = static_cast<double>(hc_sqerr) / static_cast<double>(hc_num);
        } else {
          // Same fallback as the fixed-threshold estimator: the fb_width
          // samples farthest from v (ties toward smaller node id).
          std::iota(far.begin(), far.end(), 0);
          std::sort(far.begin(), far.end(), [&](SampleIndex a, SampleIndex b) {
            return d_v[a] != d_v[b] ? d_v[a] > d_v[b] : sample.nodes[a] < sample.nodes[b];
          });
          const std::uint32_t cnt = std::min<std::uint32_t>(fb_width, static_cast<std::uint32_t>(k));
          U128 acc = 0;
          for (std::uint32_t s = 0; s < cnt; ++s)
            acc += sq_diff(d_v[far[s]], delta[pj * k + far[s]]);
          hmean = static_cast<double>(acc) / static_cast<double>(cnt);
        }
        hterm = hmean * static_cast<double>(h_num);
      }
      const double err = lterm + hterm;
      if (err < best_err) {
        best_err = err;
        best_sum = est;
      }
    }
    out.sum_est[v] = best_sum;
    out.sqerr_est[v] = best_err;
  }
  return out;
}

}  // namespace ccent
