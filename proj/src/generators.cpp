#include "ccent/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ccent/components.hpp"
#include "ccent/rng.hpp"

namespace ccent {

namespace {

Length rand_len(Rng& rng, Length max_len) {
  return max_len <= 1 ? 1 : static_cast<Length>(1 + rng.next_below(max_len));
}

}  // namespace

Graph gen_path(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<NodeId>(v + 1), 1});
  return Graph::build(n, false, edges);
}

Graph gen_cycle(NodeId n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n), 1});
  return Graph::build(n, false, edges);
}

Graph gen_star(NodeId n) {
  if (n < 2) throw std::invalid_argument("star needs n >= 2");
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v, 1});
  return Graph::build(n, false, edges);
}

Graph gen_star_with_tail(NodeId leaves, NodeId tail) {
  const NodeId n = 1 + leaves + tail;
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  NodeId prev = 0;
  for (NodeId t = 0; t < tail; ++t) {
    const NodeId v = static_cast<NodeId>(1 + leaves + t);
    edges.push_back({prev, v, 1});
    prev = v;
  }
  return Graph::build(n, false, edges);
}

Graph gen_grid2d(NodeId rows, NodeId cols) {
  const NodeId n = rows * cols;
  std::vector<Edge> edges;
  auto id = [cols](NodeId r, NodeId c) { return r * cols + c; };
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1});
    }
  }
  return Graph::build(n, false, edges);
}

Graph gen_erdos_renyi(NodeId n, double avg_deg, std::uint64_t seed, Length max_len) {
  Rng rng = make_stream(seed, "gen-er");
  const std::size_t m = static_cast<std::size_t>(avg_deg * n / 2.0);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const NodeId u = static_cast<NodeId>(rng.next_below(n));
    const NodeId v = static_cast<NodeId>(rng.next_below(n));
    if (u == v) continue;
    edges.push_back({u, v, rand_len(rng, max_len)});
  }
  return Graph::build(n, false, edges);
}

Graph gen_connected(NodeId n, double avg_deg, std::uint64_t seed, Length max_len) {
  return largest_component(gen_erdos_renyi(n, avg_deg, seed, max_len)).graph;
}

Graph gen_preferential_attachment(NodeId n, NodeId m, std::uint64_t seed) {
  if (n < m + 1) throw std::invalid_argument("need n > m");
  Rng rng = make_stream(seed, "gen-ba");
  std::vector<Edge> edges;
  std::vector<NodeId> endpoints;  // degree-biased urn
  for (NodeId v = 0; v <= m; ++v) {
    for (NodeId u = 0; u < v; ++u) {
      edges.push_back({u, v, 1});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets(m);
  for (NodeId v = m + 1; v < n; ++v) {
    for (NodeId i = 0; i < m; ++i) {
      for (;;) {
        const NodeId cand = endpoints[rng.next_below(endpoints.size())];
        bool dup = false;
        for (NodeId j = 0; j < i; ++j) dup |= targets[j] == cand;
        if (!dup) {
          targets[i] = cand;
          break;
        }
      }
    }
    for (NodeId i = 0; i < m; ++i) {
      edges.push_back({targets[i], v, 1});
      endpoints.push_back(targets[i]);
      endpoints.push_back(v);
    }
  }
  return Graph::build(n, false, edges);
}

Graph gen_small_world(NodeId n, NodeId ring_k, double rewire_p, std::uint64_t seed) {
  if (ring_k % 2 != 0 || ring_k < 2) throw std::invalid_argument("ring_k must be even, >= 2");
  Rng rng = make_stream(seed, "gen-ws");
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId j = 1; j <= ring_k / 2; ++j) {
      NodeId u = v;
      NodeId w = static_cast<NodeId>((v + j) % n);
      if (rng.next_unit() < rewire_p) {
        w = static_cast<NodeId>(rng.next_below(n));
        if (w == u) w = static_cast<NodeId>((u + 1) % n);
      }
      edges.push_back({u, w, 1});
    }
  }
  return largest_component(Graph::build(n, false, edges)).graph;
}

Graph gen_geometric(NodeId n, std::uint64_t seed) {
  Rng rng = make_stream(seed, "gen-rgg");
  std::vector<double> x(n), y(n);
  for (NodeId v = 0; v < n; ++v) {
    x[v] = rng.next_unit();
    y[v] = rng.next_unit();
  }
  const double r = 1.2 * std::sqrt(std::log(static_cast<double>(n)) / (3.141592653589793 * n));
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double dx = x[u] - x[v], dy = y[u] - y[v];
      const double d = std::sqrt(dx * dx + dy * dy);
      if (d <= r)
        edges.push_back({u, v, static_cast<Length>(std::max(1.0, std::round(d * 10000.0)))});
    }
  }
  return largest_component(Graph::build(n, false, edges)).graph;
}

Graph gen_tri_mesh(NodeId rows, NodeId cols, std::uint64_t seed) {
  Rng rng = make_stream(seed, "gen-mesh");
  const NodeId n = rows * cols;
  std::vector<double> x(n), y(n);
  auto id = [cols](NodeId r, NodeId c) { return r * cols + c; };
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      x[id(r, c)] = c + 0.6 * (rng.next_unit() - 0.5);
      y[id(r, c)] = r + 0.6 * (rng.next_unit() - 0.5);
    }
  }
  auto elen = [&](NodeId a, NodeId b) {
    const double dx = x[a] - x[b], dy = y[a] - y[b];
    return static_cast<Length>(std::max(1.0, std::round(std::sqrt(dx * dx + dy * dy) * 1000.0)));
  };
  std::vector<Edge> edges;
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      const NodeId a = id(r, c);
      if (c + 1 < cols) edges.push_back({a, id(r, c + 1), elen(a, id(r, c + 1))});
      if (r + 1 < rows) edges.push_back({a, id(r + 1, c), elen(a, id(r + 1, c))});
      if (r + 1 < rows && c + 1 < cols)
        edges.push_back({a, id(r + 1, c + 1), elen(a, id(r + 1, c + 1))});
    }
  }
  return Graph::build(n, false, edges);
}

Graph gen_random_digraph(NodeId n, double avg_deg, std::uint64_t seed, Length max_len) {
  Rng rng = make_stream(seed, "gen-digraph");
  const std::size_t m = static_cast<std::size_t>(avg_deg * n);
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    const NodeId u = static_cast<NodeId>(rng.next_below(n));
    const NodeId v = static_cast<NodeId>(rng.next_below(n));
    if (u == v) continue;
    edges.push_back({u, v, rand_len(rng, max_len)});
  }
  return Graph::build(n, true, edges);
}

Graph gen_random_dag(NodeId n, double avg_deg, std::uint64_t seed, Length max_len) {
  Rng rng = make_stream(seed, "gen-dag");
  const std::size_t m = static_cast<std::size_t>(avg_deg * n);
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    NodeId u = static_cast<NodeId>(rng.next_below(n));
    NodeId v = static_cast<NodeId>(rng.next_below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);  // arcs respect the id order: acyclic
    edges.push_back({u, v, rand_len(rng, max_len)});
  }
  return Graph::build(n, true, edges);
}

Graph gen_strongly_connected(NodeId n, double avg_deg, std::uint64_t seed, Length max_len) {
  Rng rng = make_stream(seed, "gen-scc");
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v)
    edges.push_back({v, static_cast<NodeId>((v + 1) % n), rand_len(rng, max_len)});
  const std::size_t extra =
      avg_deg > 1.0 ? static_cast<std::size_t>((avg_deg - 1.0) * n) : 0;
  for (std::size_t e = 0; e < extra; ++e) {
    const NodeId u = static_cast<NodeId>(rng.next_below(n));
    const NodeId v = static_cast<NodeId>(rng.next_below(n));
    if (u == v) continue;
    edges.push_back({u, v, rand_len(rng, max_len)});
  }
  return Graph::build(n, true, edges);
}

}  // namespace ccent
