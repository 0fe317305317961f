#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

enum class GraphFormat { kDimacsGr, kEdgeList, kWeightedEdgeList };

GraphFormat parse_format(const std::string& name);  // "dimacs-gr" | "edge-list" | "weighted-edge-list"

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stable mapping between arbitrary 64-bit input ids and internal 0..n-1 ids.
// Internal ids are assigned in order of first appearance; DIMACS files use
// the declared 1..n range directly (internal id = input id - 1).
struct IdMap {
  std::vector<std::int64_t> to_input;  // internal -> input id

  std::int64_t input_id(NodeId v) const { return to_input[v]; }
};

struct LoadedGraph {
  Graph graph;
  IdMap ids;
};

// Throws ParseError (with the offending line number) on malformed input,
// negative lengths, or out-of-range ids.
LoadedGraph load_graph(const std::string& path, GraphFormat format, bool directed);

// Whitespace-separated "node_id weight" lines, '#' comments ignored.
// Nodes absent from the file get `default_weight`.
std::vector<double> load_node_weights(const std::string& path, const IdMap& ids,
                                      double default_weight);

}  // namespace ccent
