#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace ccent {

using NodeId = std::uint32_t;
using Length = std::uint32_t;   // non-negative edge length
using Dist = std::uint64_t;     // distance accumulator, 64-bit on purpose

inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId u;
  NodeId v;
  Length len;
};

struct Arc {
  NodeId to;
  Length len;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable CSR adjacency. Undirected graphs store every edge in both
// directions; `num_edges` counts each undirected edge once. Adjacency lists
// are sorted by (to, len) so structurally equal graphs compare equal.
class Graph {
 public:
  Graph() = default;

  // `edges` lists each undirected edge once (u,v order irrelevant) or each
  // arc u->v for directed graphs. Endpoints must be < n; parallel edges and
  // self-loops are kept as given.
  static Graph build(NodeId n, bool directed, std::span<const Edge> edges);

  NodeId num_nodes() const { return n_; }
  std::size_t num_edges() const { return m_; }
  bool directed() const { return directed_; }

  std::span<const Arc> arcs(NodeId u) const {
    return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
  }

  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  // Arc u->v of length l becomes v->u of length l. Directed graphs only.
  Graph transposed() const;

  // Arc list with each undirected edge reported once (u <= v).
  std::vector<Edge> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeId n_ = 0;
  bool directed_ = false;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_;  // n_+1 entries
  std::vector<Arc> arcs_;
};

}  // namespace ccent
