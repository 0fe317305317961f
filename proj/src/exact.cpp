#include "ccent/exact.hpp"

#include <stdexcept>
#include <thread>

#include "ccent/components.hpp"
#include "ccent/dijkstra.hpp"

namespace ccent {

namespace {

// Runs `body(v)` for every node, striped over `threads` threads. Each source
// writes only its own slot, so the result is independent of scheduling.
template <typename Body>
void for_each_source(NodeId n, unsigned threads, Body&& body) {
  if (threads <= 1) {
    for (NodeId v = 0; v < n; ++v) body(v);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (NodeId v = t; v < n; v += threads) body(v);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

ExactCentrality exact_all(const Graph& g, unsigned threads) {
  if (g.directed()) throw std::invalid_argument("exact_all expects an undirected graph");
  if (!is_connected(g)) throw std::invalid_argument("exact_all expects a connected graph");
  const NodeId n = g.num_nodes();
  ExactCentrality out;
  out.sum.assign(n, 0);
  for_each_source(n, threads, [&](NodeId v) {
    thread_local std::vector<Dist> dist;
    Dist s = 0;
    sssp_visit(g, v, dist, [&](NodeId, Dist d, std::uint32_t) { s += d; });
    out.sum[v] = s;
  });
  return out;
}

std::vector<double> exact_weighted_all(const Graph& g, std::span<const double> beta,
                                       unsigned threads) {
  if (g.directed()) throw std::invalid_argument("exact_weighted_all expects an undirected graph");
  if (beta.size() != g.num_nodes()) throw std::invalid_argument("weight vector size mismatch");
  for (const double b : beta)
    if (b < 0) throw std::invalid_argument("negative node weight");
  if (!is_connected(g)) throw std::invalid_argument("exact_weighted_all expects a connected graph");

  const NodeId n = g.num_nodes();
  std::vector<double> out(n, 0.0);
  for_each_source(n, threads, [&](NodeId v) {
    thread_local std::vector<Dist> dist;
    double s = 0.0;
    sssp_visit(g, v, dist,
               [&](NodeId u, Dist d, std::uint32_t) { s += beta[u] * static_cast<double>(d); });
    out[v] = s;
  });
  return out;
}

std::vector<Dist> exact_directed_sums(const Graph& g, unsigned threads) {
  const NodeId n = g.num_nodes();
  std::vector<Dist> out(n, 0);
  std::vector<std::uint32_t> reached(n, 0);
  for_each_source(n, threads, [&](NodeId v) {
    thread_local std::vector<Dist> dist;
    Dist s = 0;
    std::uint32_t cnt = 0;
    sssp_visit(g, v, dist, [&](NodeId, Dist d, std::uint32_t) {
      s += d;
      ++cnt;
    });
    out[v] = s;
    reached[v] = cnt;
  });
  for (NodeId v = 0; v < n; ++v)
    if (reached[v] != n)
      throw std::invalid_argument("node " + std::to_string(v) + " reaches only " +
                                  std::to_string(reached[v]) + " of " + std::to_string(n) +
                                  " nodes");
  return out;
}

}  // namespace ccent
