#include "ccent/sampling.hpp"

#include <stdexcept>
#include <unordered_map>

#include "ccent/rng.hpp"

namespace ccent {

SampleSet sample_uniform(const Graph& g, std::size_t k, std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  if (k < 1 || k > n) throw std::invalid_argument("sample size k must be in [1, n]");

  // Sparse Fisher-Yates: draw position i from [i, n) and swap through a map
  // holding only displaced entries, so sampling is O(k) space for any n.
  Rng rng = make_stream(seed, "sample-uniform");
  std::unordered_map<std::size_t, NodeId> displaced;
  auto slot = [&](std::size_t i) -> NodeId {
    auto it = displaced.find(i);
    return it != displaced.end() ? it->second : static_cast<NodeId>(i);
  };

  SampleSet out;
  out.seed = seed;
  out.nodes.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.next_below(n - i);
    const NodeId picked = slot(j);
    displaced[j] = slot(i);
    out.nodes.push_back(picked);
  }
  return out;
}

}  // namespace ccent
