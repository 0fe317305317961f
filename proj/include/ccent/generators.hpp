#pragma once

#include <cstdint>

#include "ccent/graph.hpp"

namespace ccent {

// Small synthetic families for tests and the evaluation harness. All are
// undirected with unit lengths unless noted; randomized families draw from
// named streams ("gen-<family>") of the given seed.

Graph gen_path(NodeId n);
Graph gen_cycle(NodeId n);
Graph gen_star(NodeId n);  // node 0 is the center

// Heavy-tailed distance distribution: a star (center 0, `leaves` spokes)
// with a unit path of `tail` nodes hanging off the center.
Graph gen_star_with_tail(NodeId leaves, NodeId tail);

Graph gen_grid2d(NodeId rows, NodeId cols);

// About n*avg_deg/2 undirected edges with lengths uniform in [1, max_len];
// may be disconnected.
Graph gen_erdos_renyi(NodeId n, double avg_deg, std::uint64_t seed, Length max_len = 1);

// Largest component of an Erdos-Renyi draw; node count can come out below n.
Graph gen_connected(NodeId n, double avg_deg, std::uint64_t seed, Length max_len = 1);

// Preferential attachment: new nodes attach `m` edges biased by degree.
Graph gen_preferential_attachment(NodeId n, NodeId m, std::uint64_t seed);

// Ring lattice (each node to ring_k/2 neighbors each side) with edges
// rewired with probability p; largest component.
Graph gen_small_world(NodeId n, NodeId ring_k, double rewire_p, std::uint64_t seed);

// Random geometric graph on the unit square, radius picked near the
// connectivity threshold; Euclidean edge lengths scaled to integers;
// largest component.
Graph gen_geometric(NodeId n, std::uint64_t seed);

// Triangulated mesh: jittered grid points, right/down/diagonal edges,
// Euclidean integer lengths. Connected by construction.
Graph gen_tri_mesh(NodeId rows, NodeId cols, std::uint64_t seed);

// Directed families.
Graph gen_random_digraph(NodeId n, double avg_deg, std::uint64_t seed, Length max_len = 1);
Graph gen_random_dag(NodeId n, double avg_deg, std::uint64_t seed, Length max_len = 1);
// Directed cycle backbone plus random arcs: strongly connected.
Graph gen_strongly_connected(NodeId n, double avg_deg, std::uint64_t seed, Length max_len = 1);

}  // namespace ccent
