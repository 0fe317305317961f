#include "ccent/directed.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "ccent/dijkstra.hpp"
#include "ccent/hybrid_core.hpp"
#include "ccent/rng.hpp"
#include "ccent/sampling.hpp"

namespace ccent {

namespace {

void require_directed(const Graph& g) {
  if (!g.directed()) throw std::invalid_argument("a directed graph is required");
}

[[noreturn]] void fail_not_strongly_connected(NodeId from, NodeId to) {
  throw std::invalid_argument("graph is not strongly connected: no path from node " +
                              std::to_string(from) + " to node " + std::to_string(to));
}

// Pruned multi-round Dijkstra shared by the reachability estimators. Runs a
// search from `source` on `g`, settling nodes in (dist, id) order;
// `on_settle(v, d)` returns true to prune at v: v's out-arcs are skipped.
// The decision uses the state before this settlement is accounted, matching
// the estimators' contract that a node filling up during a scan still
// relaxes its arcs that one time. Timestamped labels avoid O(n) resets.
class PrunedSearch {
 public:
  explicit PrunedSearch(NodeId n) : dist_(n, 0), stamp_(n, 0) {}

  template <typename OnSettle>
  void run(const Graph& g, NodeId source, OnSettle&& on_settle) {
    ++round_;
    const std::uint64_t open = 2 * round_, done = 2 * round_ + 1;
    heap_ = {};
    dist_[source] = 0;
    stamp_[source] = open;
    heap_.emplace(0, source);
    while (!heap_.empty()) {
      const auto [d, u] = heap_.top();
      heap_.pop();
      if (stamp_[u] != open || d != dist_[u]) continue;
      stamp_[u] = done;
      if (on_settle(u, d)) continue;
      for (const Arc& a : g.arcs(u)) {
        const Dist nd = d + a.len;
        if (stamp_[a.to] < open || (stamp_[a.to] == open && nd < dist_[a.to])) {
          dist_[a.to] = nd;
          stamp_[a.to] = open;
          heap_.emplace(nd, a.to);
        }
      }
    }
  }

 private:
  std::vector<Dist> dist_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t round_ = 0;
  std::priority_queue<std::pair<Dist, NodeId>, std::vector<std::pair<Dist, NodeId>>,
                      std::greater<>>
      heap_;
};

}  // namespace

EstimateTable roundtrip_hybrid(const Graph& g, std::size_t k, std::uint64_t seed, double eps) {
  require_directed(g);
  const NodeId n = g.num_nodes();
  const SampleSet sample = sample_uniform(g, k, seed);
  const Graph gt = g.transposed();

  // Round-trip distances from every sampled node to all nodes.
  std::vector<Dist> rt(static_cast<std::size_t>(k) * n);
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId c = sample.nodes[i];
    const DistanceArray fwd = sssp(g, c);
    const DistanceArray bwd = sssp(gt, c);
    for (NodeId v = 0; v < n; ++v) {
      if (fwd.dist[v] == kInfDist) fail_not_strongly_connected(c, v);
      if (bwd.dist[v] == kInfDist) fail_not_strongly_connected(v, c);
      rt[i * n + v] = fwd.dist[v] + bwd.dist[v];
    }
  }

  // Pivot = sampled node with minimum round-trip distance, ties toward the
  // smaller node id (the multi-source rule in the round-trip metric).
  PivotAssignment pivots;
  pivots.pivot.assign(n, kNoNode);
  pivots.dist.assign(n, kInfDist);
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId c = sample.nodes[i];
    for (NodeId v = 0; v < n; ++v) {
      const Dist d = rt[i * n + v];
      if (std::make_pair(d, c) < std::make_pair(pivots.dist[v], pivots.pivot[v])) {
        pivots.dist[v] = d;
        pivots.pivot[v] = c;
      }
    }
  }

  HybridAccumulator acc(n, sample.nodes, pivots, eps);
  std::vector<std::pair<Dist, NodeId>> order(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (NodeId v = 0; v < n; ++v) order[v] = {rt[i * n + v], v};
    std::sort(order.begin(), order.end());
    acc.begin_pass(static_cast<SampleIndex>(i));
    for (const auto& [d, v] : order) acc.visit(v, d);
    acc.end_pass();
  }
  return std::move(acc).finalize().table;
}

ReachabilityEstimate reachability_estimate(const Graph& g, std::size_t k, std::uint64_t seed,
                                           ReachDirection direction, ReachOptions opts) {
  require_directed(g);
  if (k < 3) throw std::invalid_argument("reachability estimation requires k >= 3");
  const NodeId n = g.num_nodes();

  // Outbound reachability collects, for each v, the processed nodes v can
  // reach; searching the transpose from u settles exactly the nodes that
  // reach u, at distance d(v, u).
  const Graph search_graph = direction == ReachDirection::kOutbound ? g.transposed() : g;

  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = make_stream(seed, "reach-order");
  for (NodeId i = n; i > 1; --i) {
    const NodeId j = static_cast<NodeId>(rng.next_below(i));
    std::swap(perm[i - 1], perm[j]);
  }

  ReachabilityEstimate out;
  out.count.assign(n, 0);
  std::vector<Dist> distsum(n, 0);
  std::vector<std::uint64_t> t_at_k(n, 0);
  std::vector<std::uint8_t> mark(n, 0);
  if (opts.collect_samples) out.samples.resize(n);

  PrunedSearch search(n);
  std::uint64_t t = 0;
  for (const NodeId u : perm) {
    ++t;
    mark[u] = 1;
    search.run(search_graph, u, [&](NodeId v, Dist d) {
      ++out.total_scans;
      // Prune only at nodes that are full and were processed in an earlier
      // round: a full node's k samples may include a node behind it, in
      // which case that node still needs this source; the blocker's own
      // earlier turn makes up the difference. The current source does not
      // qualify as its own supplement.
      const bool prune_here = opts.prune && out.count[v] >= k && mark[v] && v != u;
      if (out.count[v] < k && v != u) {
        distsum[v] += d;
        ++out.count[v];
        if (opts.collect_samples) out.samples[v].emplace_back(u, d);
        if (out.count[v] == k) t_at_k[v] = mark[v] ? t - 1 : t;
      }
      return prune_here;
    });
  }

  out.avg_dist.assign(n, 0.0);
  out.reach_est.assign(n, 0.0);
  out.exact.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (out.count[v] > 0)
      out.avg_dist[v] = static_cast<double>(distsum[v]) / static_cast<double>(out.count[v]);
    if (out.count[v] < k) {
      out.reach_est[v] = static_cast<double>(out.count[v]);
      out.exact[v] = 1;
    } else {
      // T counts processed non-v nodes when the k-th sample arrived. In a
      // uniform permutation of the n-1 candidates, E[(k-1)/(T-1)] = R/(n-1),
      // so this estimate of the reachability cardinality R is unbiased.
      assert(t_at_k[v] >= k - 1 && t_at_k[v] >= 2);
      out.reach_est[v] = static_cast<double>(k - 1) * static_cast<double>(n - 1) /
                         static_cast<double>(t_at_k[v] - 1);
    }
  }
  return out;
}

WeightedReachabilityEstimate weighted_reachability_estimate(const Graph& g,
                                                            std::span<const double> beta,
                                                            std::size_t k, std::uint64_t seed,
                                                            ReachDirection direction,
                                                            ReachOptions opts) {
  require_directed(g);
  if (k < 2) throw std::invalid_argument("weighted reachability estimation requires k >= 2");
  if (beta.size() != g.num_nodes()) throw std::invalid_argument("weight vector size mismatch");
  const NodeId n = g.num_nodes();

  WeightedReachabilityEstimate out;
  out.rank.assign(n, std::numeric_limits<double>::infinity());
  Rng rng = make_stream(seed, "reach-ranks");
  std::vector<NodeId> positive;
  for (NodeId v = 0; v < n; ++v) {
    if (beta[v] < 0) throw std::invalid_argument("negative node weight");
    const double draw = rng.next_unit();  // one draw per node keeps ranks aligned across beta changes
    if (beta[v] > 0) {
      out.rank[v] = draw / beta[v];
      positive.push_back(v);
    }
  }
  if (positive.empty()) throw std::invalid_argument("at least one positive weight is required");
  std::sort(positive.begin(), positive.end(), [&](NodeId a, NodeId b) {
    return out.rank[a] != out.rank[b] ? out.rank[a] < out.rank[b] : a < b;
  });

  const Graph search_graph = direction == ReachDirection::kOutbound ? g.transposed() : g;

  out.count.assign(n, 0);
  out.sum_est.assign(n, 0.0);
  out.reach_est.assign(n, 0.0);
  out.exact.assign(n, 0);
  std::vector<double> distsum(n, 0.0), bcount(n, 0.0), t_rank(n, 0.0);
  if (opts.collect_samples) out.samples.resize(n);

  PrunedSearch search(n);
  std::vector<std::uint8_t> processed(n, 0);
  for (const NodeId u : positive) {
    processed[u] = 1;
    search.run(search_graph, u, [&](NodeId v, Dist d) {
      ++out.total_scans;
      const bool prune_here = opts.prune && out.count[v] >= k && processed[v] && v != u;
      if (out.count[v] < k && v != u) {
        ++out.count[v];
        if (opts.collect_samples) out.samples[v].emplace_back(u, d);
        if (out.count[v] < k) {
          distsum[v] += beta[u] * static_cast<double>(d);
          bcount[v] += beta[u];
        } else {
          t_rank[v] = out.rank[u];
        }
      }
      return prune_here;
    });
  }

  for (NodeId v = 0; v < n; ++v) {
    if (out.count[v] == 0) {
      out.exact[v] = 1;
    } else if (out.count[v] < k) {
      out.sum_est[v] = distsum[v];
      out.reach_est[v] = bcount[v];
      out.exact[v] = 1;
    } else {
      out.sum_est[v] = distsum[v] / t_rank[v];
      out.reach_est[v] = static_cast<double>(k - 1) / t_rank[v];
    }
  }
  return out;
}

}  // namespace ccent
