#include "ccent/varopt.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "ccent/rng.hpp"

namespace ccent {

namespace {

struct Item {
  NodeId node;
  double w;
};

// True when every weight is a non-negative integer small enough for exact
// 128-bit threshold comparisons.
bool integral_weights(std::span<const Item> items) {
  for (const Item& it : items) {
    if (it.w != std::floor(it.w) || it.w > 0x1p53) return false;
  }
  return true;
}

}  // namespace

WeightedSample varopt_sample(std::span<const double> beta, std::size_t k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample size k must be positive");
  std::vector<Item> items;
  for (NodeId v = 0; v < beta.size(); ++v) {
    if (beta[v] < 0) throw std::invalid_argument("negative node weight");
    if (beta[v] > 0) items.push_back({v, beta[v]});
  }
  if (items.size() < k)
    throw std::invalid_argument("need at least k nodes with positive weight (" +
                                std::to_string(items.size()) + " < " + std::to_string(k) + ")");

  WeightedSample out;
  out.seed = seed;

  // Descending weight, ties by id, to locate the probability-1 group.
  std::vector<Item> sorted = items;
  std::sort(sorted.begin(), sorted.end(), [](const Item& a, const Item& b) {
    return a.w != b.w ? a.w > b.w : a.node < b.node;
  });

  std::size_t heavy = 0;  // number of probability-1 inclusions
  double tau = 0.0;
  if (sorted.size() == k) {
    heavy = k;
    tau = sorted.back().w;  // everyone included with probability 1
  } else {
    std::vector<double> suffix(sorted.size() + 1, 0.0);
    for (std::size_t i = sorted.size(); i-- > 0;) suffix[i] = suffix[i + 1] + sorted[i].w;

    const bool exact = integral_weights(sorted);
    using I128 = unsigned __int128;
    std::vector<I128> isuffix;
    if (exact) {
      isuffix.assign(sorted.size() + 1, 0);
      for (std::size_t i = sorted.size(); i-- > 0;)
        isuffix[i] = isuffix[i + 1] + static_cast<I128>(static_cast<std::uint64_t>(sorted[i].w));
    }
    // w >= tau_a  <=>  w * (k - a) >= suffix(a), compared exactly when possible.
    auto ge_tau = [&](double w, std::size_t a) {
      if (exact)
        return static_cast<I128>(static_cast<std::uint64_t>(w)) * (k - a) >= isuffix[a];
      return w >= suffix[a] / static_cast<double>(k - a);
    };

    bool found = false;
    for (std::size_t a = 0; a < k; ++a) {
      const bool heavy_ok = a == 0 || ge_tau(sorted[a - 1].w, a);
      const bool light_ok = !ge_tau(sorted[a].w, a);
      if (heavy_ok && light_ok) {
        heavy = a;
        tau = suffix[a] / static_cast<double>(k - a);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("varopt threshold recurrence found no consistent split");
  }

  // Probability-1 inclusions keep their own weight.
  std::vector<std::uint8_t> is_heavy(beta.size(), 0);
  for (std::size_t i = 0; i < heavy; ++i) is_heavy[sorted[i].node] = 1;
  for (const Item& it : items) {
    if (is_heavy[it.node]) {
      out.nodes.push_back(it.node);
      out.adjusted.push_back(it.w);
    }
  }

  // Systematic PPS over the sub-threshold group: pick positions u0 + m*tau
  // on the cumulative weight line, m = 0..k-heavy-1. The walk order is a
  // fresh random permutation, which symmetrizes the pairwise inclusion
  // correlations; the marginals are length/tau = beta/tau either way.
  const std::size_t picks = k - heavy;
  if (picks > 0) {
    Rng rng = make_stream(seed, "varopt");
    const double u0 = rng.next_unit() * tau;
    std::vector<Item> light;
    for (const Item& it : items)
      if (!is_heavy[it.node]) light.push_back(it);
    for (std::size_t i = light.size(); i > 1; --i)
      std::swap(light[i - 1], light[rng.next_below(i)]);
    std::vector<std::uint8_t> picked(beta.size(), 0);
    double cum = 0.0;
    std::size_t m = 0;
    for (const Item& it : light) {
      cum += it.w;
      while (m < picks && u0 + static_cast<double>(m) * tau < cum) {
        // A light weight is < tau, so at most one position lands in its
        // interval up to rounding; never emit a duplicate regardless.
        if (!picked[it.node]) {
          picked[it.node] = 1;
          out.nodes.push_back(it.node);
          out.adjusted.push_back(tau);
        }
        ++m;
      }
    }
    // Rounding of the last position may leave picks short; top up from the
    // tail of the walk order.
    while (out.nodes.size() < k) {
      for (std::size_t i = light.size(); i-- > 0;) {
        if (!picked[light[i].node]) {
          picked[light[i].node] = 1;
          out.nodes.push_back(light[i].node);
          out.adjusted.push_back(tau);
          break;
        }
      }
    }
    // Draw-order output is an implementation detail; keep ids ascending so
    // results do not depend on the internal walk order.
    std::vector<std::size_t> order(out.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.nodes[a] < out.nodes[b]; });
    std::vector<NodeId> nodes_sorted(out.nodes.size());
    std::vector<double> adj_sorted(out.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      nodes_sorted[i] = out.nodes[order[i]];
      adj_sorted[i] = out.adjusted[order[i]];
    }
    out.nodes = std::move(nodes_sorted);
    out.adjusted = std::move(adj_sorted);
  }

  out.tau = tau;
  assert(out.nodes.size() == k);
  return out;
}

}  // namespace ccent
