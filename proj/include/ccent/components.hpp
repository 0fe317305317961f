#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

// Connected components of an undirected graph; component ids are assigned in
// ascending order of each component's smallest node id.
struct Components {
  std::vector<NodeId> comp;         // node -> component id
  std::vector<NodeId> sizes;        // component id -> size
  NodeId count() const { return static_cast<NodeId>(sizes.size()); }
};

Components connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Two nodes from different components, if any (smallest ids of the first two
// components). Used for actionable error messages.
std::optional<std::pair<NodeId, NodeId>> find_disconnected_pair(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> to_old;    // new id -> old id (ascending)
  std::vector<NodeId> from_old;  // old id -> new id, kNoNode if dropped
};

// Induced subgraph on the largest connected component; ties are broken in
// favor of the component containing the smallest node id.
InducedSubgraph largest_component(const Graph& g);

}  // namespace ccent
