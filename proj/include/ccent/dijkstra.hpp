#pragma once

#include <cassert>
#include <queue>
#include <tuple>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

struct DistanceArray {
  NodeId source = 0;
  std::vector<Dist> dist;  // kInfDist where unreachable
};

struct VisitEvent {
  NodeId node;
  Dist dist;
  std::uint32_t index;  // 0-based settlement order
};

// Nearest sampled source per node: c(v) and Delta(v). Nodes unreachable from
// every source carry (kNoNode, kInfDist).
struct PivotAssignment {
  std::vector<NodeId> pivot;
  std::vector<Dist> dist;
};

// Dijkstra with a lazy-deletion binary heap keyed by (dist, node): equal
// distances settle in ascending node id, which fixes the visit order the
// streaming estimators depend on. `on_visit(u, d, index)` fires once per
// reachable node in settlement order.
template <typename OnVisit>
void sssp_visit(const Graph& g, NodeId source, std::vector<Dist>& dist, OnVisit&& on_visit) {
  assert(source < g.num_nodes());
  dist.assign(g.num_nodes(), kInfDist);
  using Entry = std::pair<Dist, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  std::uint32_t index = 0;
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;  // stale entry
    on_visit(u, d, index++);
    for (const Arc& a : g.arcs(u)) {
      const Dist nd = d + a.len;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        heap.emplace(nd, a.to);
      }
    }
  }
}

DistanceArray sssp(const Graph& g, NodeId source);
DistanceArray sssp(const Graph& g, NodeId source, std::vector<VisitEvent>& events);

// Distance and identity of the nearest source, computed in one Dijkstra run
// keyed lexicographically by (dist, source id): among equally near sources
// the smallest id wins, also across zero-length edges.
PivotAssignment multi_source_sssp(const Graph& g, std::span<const NodeId> sources);

}  // namespace ccent
