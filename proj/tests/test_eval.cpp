#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ccent/components.hpp"
#include "ccent/eval.hpp"
#include "ccent/generators.hpp"

using namespace ccent;

TEST_CASE("evaluate: exact method has zero error everywhere") {
  const Graph g = gen_grid2d(8, 8);
  EvalOptions opts;
  opts.method = Method::kExact;
  opts.queries = 20;
  const EvalReport r = evaluate(g, "grid8", opts);
  CHECK(r.avg_rel_err == 0.0);
  CHECK(r.nrmse == 0.0);
  for (const double e : r.rel_err) CHECK(e == 0.0);
}

TEST_CASE("evaluate: sampling with k = n has zero error") {
  const Graph g = gen_connected(60, 4.0, 2, 3);
  EvalOptions opts;
  opts.method = Method::kSampling;
  opts.k = g.num_nodes();
  opts.queries = 1000;
  const EvalReport r = evaluate(g, "er", opts);
  CHECK(r.avg_rel_err == 0.0);
  CHECK(r.query_nodes.size() == g.num_nodes());  // queries > n uses all nodes
}

TEST_CASE("evaluate: report is self-consistent and deterministic") {
  const Graph g = gen_connected(120, 4.0, 6, 5);
  EvalOptions opts;
  opts.method = Method::kHybrid;
  opts.k = 16;
  opts.queries = 50;
  opts.seed = 9;
  const EvalReport a = evaluate(g, "er", opts);
  const EvalReport b = evaluate(g, "er", opts);

  double mean = 0;
  for (const double e : a.rel_err) mean += e;
  mean /= static_cast<double>(a.rel_err.size());
  CHECK(std::abs(a.avg_rel_err - mean) <= 1e-12);

  std::ostringstream csv_a, csv_b, cdf_a, cdf_b;
  write_report_csv(a, csv_a);
  write_report_csv(b, csv_b);
  write_cdf_csv(a, cdf_a);
  write_cdf_csv(b, cdf_b);
  CHECK(csv_a.str() == csv_b.str());
  CHECK(cdf_a.str() == cdf_b.str());

  // Sorted distribution ascends.
  for (std::size_t i = 1; i < a.sorted_err.size(); ++i)
    CHECK(a.sorted_err[i] >= a.sorted_err[i - 1]);
}

TEST_CASE("evaluate: oracle cap is enforced") {
  const Graph g = gen_grid2d(8, 8);
  EvalOptions opts;
  opts.method = Method::kHybrid;
  opts.k = 8;
  opts.oracle_cap = 10;
  CHECK_THROWS_AS(evaluate(g, "grid", opts), std::invalid_argument);
  opts.ignore_oracle_cap = true;
  CHECK_NOTHROW(evaluate(g, "grid", opts));
}

TEST_CASE("nrmse_sweep: k = n gives zero NRMSE") {
  const Graph g = gen_connected(50, 4.0, 4, 2);
  const std::size_t ks[] = {g.num_nodes()};
  const std::vector<SweepRow> rows = nrmse_sweep(g, ks, 3, 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].nrmse == 0.0);
}

TEST_CASE("nrmse_sweep: hybrid error does not blow up with k") {
  const Graph g = gen_connected(300, 4.0, 8, 1);
  const std::size_t ks[] = {8, 16, 32};
  const std::vector<SweepRow> rows = nrmse_sweep(g, ks, 5, 3);
  REQUIRE(rows.size() == 3);
  for (const SweepRow& r : rows) {
    CHECK(r.nrmse < 1.0);
    CHECK(r.eps == doctest::Approx(std::sqrt(1.0 / static_cast<double>(r.k))));
  }
  CHECK(rows[2].nrmse <= rows[0].nrmse * 1.10);
}

TEST_CASE("star-with-tail: hybrid NRMSE beats sampling NRMSE") {
  const Graph g = gen_star_with_tail(400, 100);
  EvalOptions opts;
  opts.method = Method::kHybrid;
  opts.k = 32;
  opts.queries = g.num_nodes();
  opts.seed = 4;
  const EvalReport hybrid = evaluate(g, "tail", opts);
  opts.method = Method::kSampling;
  const EvalReport sampling = evaluate(g, "tail", opts);
  CHECK(hybrid.nrmse < sampling.nrmse);
}

TEST_CASE("evaluate supports the round-trip method on digraphs") {
  const Graph g = gen_strongly_connected(120, 3.0, 6, 4);
  EvalOptions opts;
  opts.method = Method::kRoundtrip;
  opts.k = 12;
  opts.queries = 30;
  const EvalReport r = evaluate(g, "scc", opts);
  CHECK(r.rel_err.size() == 30);
  for (const double e : r.rel_err) CHECK(e < 1.0);
}

TEST_CASE("generators produce the advertised shapes") {
  CHECK(gen_path(5).num_edges() == 4);
  CHECK(gen_cycle(6).num_edges() == 6);
  CHECK(gen_star(7).degree(0) == 6);
  CHECK(gen_grid2d(4, 5).num_nodes() == 20);
  CHECK(gen_star_with_tail(10, 4).num_nodes() == 15);
  CHECK(is_connected(gen_preferential_attachment(200, 3, 1)));
  CHECK(is_connected(gen_small_world(200, 6, 0.1, 2)));
  CHECK(is_connected(gen_geometric(300, 3)));
  CHECK(is_connected(gen_tri_mesh(12, 12, 4)));
  CHECK(gen_random_dag(50, 2.0, 5, 3).directed());
}
