#include "ccent/dijkstra.hpp"

namespace ccent {

DistanceArray sssp(const Graph& g, NodeId source) {
  DistanceArray out;
  out.source = source;
  sssp_visit(g, source, out.dist, [](NodeId, Dist, std::uint32_t) {});
  return out;
}

DistanceArray sssp(const Graph& g, NodeId source, std::vector<VisitEvent>& events) {
  DistanceArray out;
  out.source = source;
  events.clear();
  sssp_visit(g, source, out.dist, [&](NodeId u, Dist d, std::uint32_t i) {
    events.push_back(VisitEvent{u, d, i});
  });
  return out;
}

PivotAssignment multi_source_sssp(const Graph& g, std::span<const NodeId> sources) {
  assert(!sources.empty());
  const NodeId n = g.num_nodes();
  PivotAssignment out;
  out.pivot.assign(n, kNoNode);
  out.dist.assign(n, kInfDist);

  // Keys are (dist, source id) compared lexicographically; adding an arc
  // length preserves the order, so plain Dijkstra applies and the tie rule
  // (smallest source id among nearest sources) holds even across
  // zero-length edges.
  using Entry = std::tuple<Dist, NodeId, NodeId>;  // (dist, pivot, node)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (const NodeId s : sources) {
    assert(s < n);
    if (std::make_pair(Dist{0}, s) < std::make_pair(out.dist[s], out.pivot[s])) {
      out.dist[s] = 0;
      out.pivot[s] = s;
      heap.emplace(Dist{0}, s, s);
    }
  }
  while (!heap.empty()) {
    const auto [d, p, u] = heap.top();
    heap.pop();
    if (d != out.dist[u] || p != out.pivot[u]) continue;
    for (const Arc& a : g.arcs(u)) {
      const Dist nd = d + a.len;
      if (std::make_pair(nd, p) < std::make_pair(out.dist[a.to], out.pivot[a.to])) {
        out.dist[a.to] = nd;
        out.pivot[a.to] = p;
        heap.emplace(nd, p, a.to);
      }
    }
  }
  return out;
}

}  // namespace ccent
