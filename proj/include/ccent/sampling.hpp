#pragma once

#include <cstdint>
#include <vector>

#include "ccent/graph.hpp"

namespace ccent {

struct SampleSet {
  std::vector<NodeId> nodes;  // k distinct ids, in draw order
  std::uint64_t seed = 0;

  std::size_t k() const { return nodes.size(); }
};

// Uniform without-replacement sample of k of the n nodes, deterministic per
// (n, k, seed). Stream name: "sample-uniform".
SampleSet sample_uniform(const Graph& g, std::size_t k, std::uint64_t seed);

}  // namespace ccent
