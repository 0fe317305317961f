#include "ccent/components.hpp"

#include <stdexcept>

namespace ccent {

Components connected_components(const Graph& g) {
  if (g.directed()) throw std::logic_error("connected_components expects an undirected graph");
  const NodeId n = g.num_nodes();
  Components out;
  out.comp.assign(n, kNoNode);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (out.comp[s] != kNoNode) continue;
    const NodeId id = out.count();
    out.sizes.push_back(0);
    out.comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      ++out.sizes[id];
      for (const Arc& a : g.arcs(u)) {
        if (out.comp[a.to] == kNoNode) {
          out.comp[a.to] = id;
          stack.push_back(a.to);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return true;
  return connected_components(g).count() == 1;
}

std::optional<std::pair<NodeId, NodeId>> find_disconnected_pair(const Graph& g) {
  const Components c = connected_components(g);
  if (c.count() <= 1) return std::nullopt;
  NodeId first = kNoNode, second = kNoNode;
  for (NodeId v = 0; v < g.num_nodes() && second == kNoNode; ++v) {
    if (c.comp[v] == 0 && first == kNoNode) first = v;
    if (c.comp[v] != 0 && second == kNoNode) second = v;
  }
  return std::make_pair(first, second);
}

InducedSubgraph largest_component(const Graph& g) {
  const Components c = connected_components(g);
  NodeId best = 0;
  for (NodeId id = 1; id < c.count(); ++id)
    if (c.sizes[id] > c.sizes[best]) best = id;  // first maximum = smallest contained node id

  InducedSubgraph out;
  out.from_old.assign(g.num_nodes(), kNoNode);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (c.comp[v] == best) {
      out.from_old[v] = static_cast<NodeId>(out.to_old.size());
      out.to_old.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edge_list())
    if (c.comp[e.u] == best) edges.push_back(Edge{out.from_old[e.u], out.from_old[e.v], e.len});
  out.graph = Graph::build(static_cast<NodeId>(out.to_old.size()), false, edges);
  return out;
}

}  // namespace ccent
