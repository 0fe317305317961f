#include "ccent/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ccent {

Graph Graph::build(NodeId n, bool directed, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  g.m_ = edges.size();
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);

  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    ++g.offsets_[e.u + 1];
    if (!directed) ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.arcs_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.arcs_[cursor[e.u]++] = Arc{e.v, e.len};
    if (!directed) g.arcs_[cursor[e.v]++] = Arc{e.u, e.len};
  }

  for (NodeId u = 0; u < n; ++u) {
    auto* first = g.arcs_.data() + g.offsets_[u];
    auto* last = g.arcs_.data() + g.offsets_[u + 1];
    std::sort(first, last, [](const Arc& a, const Arc& b) {
      return a.to != b.to ? a.to < b.to : a.len < b.len;
    });
  }
  return g;
}

Graph Graph::transposed() const {
  if (!directed_) throw std::logic_error("transpose is defined for directed graphs");
  std::vector<Edge> rev;
  rev.reserve(arcs_.size());
  for (NodeId u = 0; u < n_; ++u)
    for (const Arc& a : arcs(u)) rev.push_back(Edge{a.to, u, a.len});
  return build(n_, true, rev);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(m_);
  if (directed_) {
    for (NodeId u = 0; u < n_; ++u)
      for (const Arc& a : arcs(u)) out.push_back(Edge{u, a.to, a.len});
  } else {
    // Each undirected edge is stored twice; emit the copy with u <= to, and
    // pair up self-loops / parallel edges by emitting every second copy.
    std::vector<std::size_t> pending(n_, 0);
    for (NodeId u = 0; u < n_; ++u) {
      for (const Arc& a : arcs(u)) {
        if (u < a.to) {
          out.push_back(Edge{u, a.to, a.len});
        } else if (u == a.to) {
          if (pending[u]++ % 2 == 0) out.push_back(Edge{u, u, a.len});
        }
      }
    }
  }
  assert(out.size() == m_);
  return out;
}

}  // namespace ccent
