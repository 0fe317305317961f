#include <doctest.h>

#include <cmath>

#include "ccent/estimators.hpp"
#include "ccent/exact.hpp"
#include "ccent/generators.hpp"
#include "ccent/rng.hpp"
#include "ccent/varopt.hpp"
#include "ccent/weighted.hpp"
#include "ref/direct_estimators.hpp"

using namespace ccent;

TEST_CASE("varopt: uniform weights give tau = n/k and adjusted weight n/k") {
  const std::size_t n = 40, k = 8;
  const std::vector<double> beta(n, 1.0);
  const WeightedSample ws = varopt_sample(beta, k, 3);
  CHECK(ws.k() == k);
  CHECK(ws.tau == doctest::Approx(static_cast<double>(n) / k));
  for (const double a : ws.adjusted) CHECK(a == doctest::Approx(static_cast<double>(n) / k));
}

TEST_CASE("varopt: a dominant weight is always sampled with its own weight") {
  std::vector<double> beta(30, 1.0);
  beta[17] = 1e6;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const WeightedSample ws = varopt_sample(beta, 10, seed);
    bool found = false;
    for (std::size_t i = 0; i < ws.k(); ++i) {
      if (ws.nodes[i] == 17) {
        found = true;
        CHECK(ws.adjusted[i] == 1e6);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("varopt: inclusion frequencies match min(1, beta/tau)") {
  // Smaller Monte Carlo here; the acceptance suite runs the full 1e5-seed check.
  const std::size_t n = 20, k = 5, trials = 20000;
  std::vector<double> beta(n);
  Rng rng = make_stream(42, "test-weights");
  for (std::size_t v = 0; v < n; ++v) beta[v] = 0.2 + 3.0 * rng.next_unit();

  const double tau = varopt_sample(beta, k, 0).tau;
  std::vector<std::size_t> hits(n, 0);
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const WeightedSample ws = varopt_sample(beta, k, seed);
    CHECK(ws.tau == tau);  // tau depends only on the weights
    for (const NodeId v : ws.nodes) ++hits[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    const double want = std::min(1.0, beta[v] / tau);
    const double got = static_cast<double>(hits[v]) / trials;
    CHECK(std::abs(got - want) < 0.02);
  }
}

TEST_CASE("varopt: sum of adjusted weights is the total weight in expectation") {
  std::vector<double> beta(25);
  Rng rng = make_stream(7, "test-weights");
  double total = 0;
  for (auto& b : beta) {
    b = rng.next_unit() * 4.0;
    total += b;
  }
  const std::size_t trials = 20000;
  double sum = 0, sum_sq = 0;
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const WeightedSample ws = varopt_sample(beta, 6, seed);
    double s = 0;
    for (const double a : ws.adjusted) s += a;
    sum += s;
    sum_sq += s * s;
  }
  const double mean = sum / trials;
  const double se = std::sqrt((sum_sq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - total) <= 3.0 * se + 1e-9);
}

TEST_CASE("varopt rejects too few positive weights") {
  const std::vector<double> beta{1.0, 0.0, 2.0};
  CHECK_THROWS_AS(varopt_sample(beta, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(varopt_sample(std::vector<double>{1.0, -1.0}, 1, 1), std::invalid_argument);
}

TEST_CASE("weighted hybrid: indicator weight on a sampled node gives d(v,z)") {
  const Graph g = gen_connected(50, 4.0, 19, 4);
  std::vector<double> beta(g.num_nodes(), 0.0);
  const NodeId z = 7;
  beta[z] = 1.0;
  const WeightedSample ws = varopt_sample(beta, 1, 11);
  REQUIRE(ws.nodes == std::vector<NodeId>{z});
  CHECK(ws.adjusted[0] == doctest::Approx(1.0));
  const EstimateTable t = estimate_weighted_hybrid(g, beta, ws, 0.3);
  const DistanceArray d = sssp(g, z);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (v == z) continue;
    CHECK(t.sum_est[v] == doctest::Approx(static_cast<double>(d.dist[v])));
  }
}

TEST_CASE("weighted hybrid: streaming equals the direct matrix evaluation") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Graph g = gen_connected(150, 4.5, seed + 80, seed % 2 ? 9 : 1);
    std::vector<double> beta(g.num_nodes());
    Rng rng = make_stream(seed, "test-weights");
    for (auto& b : beta) b = 0.1 + 2.0 * rng.next_unit();
    const WeightedSample ws = varopt_sample(beta, 12, seed + 1);
    const ref::Matrix rows = ref::distance_rows(g, ws.nodes);
    for (const double eps : {0.1, 0.5}) {
      const EstimateTable got = estimate_weighted_hybrid(g, beta, ws, eps);
      const ref::DirectResult want =
          ref::direct_weighted_hybrid(g.num_nodes(), ws, beta, rows, eps);
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        CHECK(got.sum_est[v] == doctest::Approx(want.sum_est[v]).epsilon(1e-9));
        CHECK(got.sqerr_est[v] == doctest::Approx(want.sqerr_est[v]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("weighted hybrid: uniform weights against the direct reference") {
  const Graph g = gen_connected(120, 4.0, 5, 1);
  const std::vector<double> beta(g.num_nodes(), 1.0);
  const WeightedSample ws = varopt_sample(beta, 10, 3);
  CHECK(ws.tau == doctest::Approx(static_cast<double>(g.num_nodes()) / 10.0));
  const ref::Matrix rows = ref::distance_rows(g, ws.nodes);
  const EstimateTable got = estimate_weighted_hybrid(g, beta, ws, 0.2);
  const ref::DirectResult want =
      ref::direct_weighted_hybrid(g.num_nodes(), ws, beta, rows, 0.2);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    CHECK(got.sum_est[v] == doctest::Approx(want.sum_est[v]).epsilon(1e-9));
}

TEST_CASE("weighted hybrid: exact scaling under beta = 2") {
  const Graph g = gen_connected(100, 4.0, 29, 6);
  const std::vector<double> ones(g.num_nodes(), 1.0);
  const std::vector<double> twos(g.num_nodes(), 2.0);
  const WeightedSample ws1 = varopt_sample(ones, 9, 17);
  const WeightedSample ws2 = varopt_sample(twos, 9, 17);
  CHECK(ws1.nodes == ws2.nodes);  // identical sampling decisions
  CHECK(ws2.tau == 2.0 * ws1.tau);
  const EstimateTable t1 = estimate_weighted_hybrid(g, ones, ws1, 0.25);
  const EstimateTable t2 = estimate_weighted_hybrid(g, twos, ws2, 0.25);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    CHECK(t2.sum_est[v] == 2.0 * t1.sum_est[v]);  // exact: power-of-two scaling
}

TEST_CASE("weighted hybrid: zero-weight nodes still get estimates") {
  const Graph g = gen_connected(60, 4.0, 31, 3);
  std::vector<double> beta(g.num_nodes(), 1.0);
  beta[5] = 0.0;
  beta[6] = 0.0;
  const WeightedSample ws = varopt_sample(beta, 8, 2);
  for (const NodeId c : ws.nodes) {
    CHECK(c != 5);
    CHECK(c != 6);
  }
  const EstimateTable t = estimate_weighted_hybrid(g, beta, ws, 0.3);
  const std::vector<double> truth = exact_weighted_all(g, beta);
  CHECK(t.sum_est[5] > 0.0);
  CHECK(truth[5] > 0.0);
}

TEST_CASE("weighted hybrid: Monte Carlo mean tracks the exact weighted sums") {
  const Graph g = gen_connected(80, 5.0, 41, 1);
  std::vector<double> beta(g.num_nodes());
  Rng rng = make_stream(9, "test-weights");
  for (auto& b : beta) b = 0.2 + rng.next_unit();
  const std::vector<double> truth = exact_weighted_all(g, beta);
  const std::size_t trials = 400;
  const NodeId v = 3;
  double sum = 0, sum_sq = 0;
  std::size_t cnt = 0;
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    const WeightedSample ws = varopt_sample(beta, 16, seed);
    bool sampled = false;
    for (const NodeId c : ws.nodes) sampled |= c == v;
    if (sampled) continue;
    const EstimateTable t = estimate_weighted_hybrid(g, beta, ws, default_eps(16));
    sum += t.sum_est[v];
    sum_sq += t.sum_est[v] * t.sum_est[v];
    ++cnt;
  }
  const double mean = sum / cnt;
  const double se = std::sqrt(std::max(0.0, sum_sq / cnt - mean * mean) / cnt);
  CHECK(std::abs(mean - truth[v]) <= 3.0 * se + 1e-9);
}
