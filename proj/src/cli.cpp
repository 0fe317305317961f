#include "ccent/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccent/components.hpp"
#include "ccent/directed.hpp"
#include "ccent/estimate_table.hpp"
#include "ccent/estimators.hpp"
#include "ccent/eval.hpp"
#include "ccent/exact.hpp"
#include "ccent/graph_io.hpp"
#include "ccent/varopt.hpp"
#include "ccent/version.hpp"
#include "ccent/weighted.hpp"

namespace ccent {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string input;
  std::string format = "edge-list";
  bool directed = false;
  bool use_largest_component = false;
  std::string output;  // empty -> stdout
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("-i,--input", c.input, "input graph file")->required();
  cmd->add_option("--format", c.format,
                  "graph format: dimacs-gr | edge-list | weighted-edge-list")
      ->capture_default_str()
      ->check(CLI::IsMember({"dimacs-gr", "edge-list", "weighted-edge-list"}));
  cmd->add_flag("--directed", c.directed, "treat input as a directed graph");
  cmd->add_flag("--largest-component", c.use_largest_component,
                "restrict to the largest connected component (undirected)");
  cmd->add_option("-o,--output", c.output, "output file (default: stdout)");
  cmd->add_option("--seed", c.seed, "random seed; all randomness derives from it")
      ->capture_default_str();
  cmd->add_option("--threads", c.threads, "threads for exact-oracle passes")
      ->check(CLI::PositiveNumber);
}

struct LoadedInput {
  Graph graph;
  std::vector<std::int64_t> original;  // internal id -> input id
};

LoadedInput load_input(const CommonOpts& c) {
  LoadedGraph lg = load_graph(c.input, parse_format(c.format), c.directed);
  LoadedInput in{std::move(lg.graph), std::move(lg.ids.to_input)};
  if (c.use_largest_component) {
    if (c.directed) throw std::invalid_argument("--largest-component requires an undirected graph");
    InducedSubgraph sub = largest_component(in.graph);
    std::vector<std::int64_t> original(sub.to_old.size());
    for (NodeId v = 0; v < sub.to_old.size(); ++v) original[v] = in.original[sub.to_old[v]];
    in.graph = std::move(sub.graph);
    in.original = std::move(original);
  }
  return in;
}

void require_connected_for_estimate(const LoadedInput& in) {
  if (auto pair = find_disconnected_pair(in.graph))
    throw std::invalid_argument(
        "graph is disconnected: nodes " + std::to_string(in.original[pair->first]) + " and " +
        std::to_string(in.original[pair->second]) +
        " are in different components (use --largest-component)");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_config_header(std::ostream& out, const std::string& command,
                         const std::string& config, std::uint64_t seed) {
  out << "# ccent " << kVersion << ' ' << command << '\n';
  out << "# config: " << config << '\n';
  out << "# rng: " << kRngLayout << " seed=" << seed << '\n';
}

void write_estimate_tsv(std::ostream& out, const EstimateTable& t,
                        const std::vector<std::int64_t>& original) {
  out << "# columns: node_id\tS_hat\tB_inv_hat\tsqerr_est\texact_flag\n";
  const double scale = static_cast<double>(t.size() - 1);
  for (NodeId v = 0; v < t.size(); ++v) {
    out << original[v] << '\t' << fmt_double(t.sum_est[v]) << '\t'
        << fmt_double(scale / t.sum_est[v]) << '\t' << fmt_double(t.sqerr_est[v]) << '\t'
        << int(t.exact[v]) << '\n';
  }
}

std::string describe(const CommonOpts& c) {
  std::ostringstream os;
  os << "input=" << c.input << " format=" << c.format << " directed=" << c.directed
     << " largest-component=" << c.use_largest_component << " seed=" << c.seed
     << " threads=" << c.threads;
  return os.str();
}

std::vector<double> load_weights_or_default(const std::string& weights_path,
                                            const std::vector<std::int64_t>& original,
                                            double default_weight) {
  if (weights_path.empty())
    return std::vector<double>(original.size(), default_weight);
  IdMap ids;
  ids.to_input = original;
  return load_node_weights(weights_path, ids, default_weight);
}

int run_parsed(CLI::App& app);

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"closeness-centrality estimation toolkit"};
  app.set_version_flag("--version", std::string("ccent ") + kVersion);
  app.require_subcommand(1);

  // ---- exact ----
  auto* cmd_exact = app.add_subcommand("exact", "exact centralities via one Dijkstra per node");
  CommonOpts c_exact;
  add_common(cmd_exact, c_exact);

  // ---- estimate ----
  auto* cmd_est = app.add_subcommand("estimate", "estimate centralities for all nodes");
  CommonOpts c_est;
  add_common(cmd_est, c_est);
  std::string method = "hybrid";
  std::size_t k = 100;
  double eps = 0.0;
  std::vector<double> grid;
  std::string weights_path;
  double default_weight = 1.0;
  cmd_est->add_option("--method", method,
                      "sampling | pivoting | pivoting-ub | hybrid | adaptive | adaptive-sweep | "
                      "weighted-hybrid | roundtrip")
      ->check(CLI::IsMember({"sampling", "pivoting", "pivoting-ub", "hybrid", "adaptive",
                             "adaptive-sweep", "weighted-hybrid", "roundtrip"}));
  cmd_est->add_option("--k", k, "sample size")->capture_default_str()->check(CLI::PositiveNumber);
  cmd_est->add_option("--eps", eps, "hybrid threshold parameter (default: sqrt(1/k))");
  cmd_est->add_option("--grid", grid, "eps grid for --method adaptive")->delimiter(',');
  cmd_est->add_option("--weights", weights_path, "node weight file (node_id weight per line)");
  cmd_est->add_option("--default-weight", default_weight,
                      "weight for nodes missing from --weights (default 1.0)");

  // ---- reach ----
  auto* cmd_reach = app.add_subcommand("reach", "directed reachability / average-distance estimates");
  CommonOpts c_reach;
  add_common(cmd_reach, c_reach);
  std::size_t reach_k = 100;
  std::string direction = "outbound";
  bool reach_weighted = false;
  std::string reach_weights_path;
  double reach_default_weight = 1.0;
  cmd_reach->add_option("--k", reach_k, "sample size per node")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_reach->add_option("--direction", direction, "outbound | inbound")
      ->check(CLI::IsMember({"outbound", "inbound"}));
  cmd_reach->add_flag("--weighted", reach_weighted, "weighted (bottom-k) variant");
  cmd_reach->add_option("--weights", reach_weights_path, "node weight file");
  cmd_reach->add_option("--default-weight", reach_default_weight,
                        "weight for nodes missing from --weights (default 1.0)");

  // ---- eval ----
  auto* cmd_eval = app.add_subcommand("eval", "compare a method against the exact oracle");
  CommonOpts c_eval;
  add_common(cmd_eval, c_eval);
  std::string eval_method = "hybrid";
  std::size_t eval_k = 100;
  double eval_eps = 0.0;
  std::vector<double> eval_grid;
  std::size_t queries = 1000;
  NodeId oracle_cap = 20000;
  bool no_oracle_cap = false;
  std::string eval_weights_path;
  double eval_default_weight = 1.0;
  cmd_eval->add_option("--method", eval_method, "method to evaluate")
      ->check(CLI::IsMember({"exact", "sampling", "pivoting", "pivoting-ub", "hybrid", "adaptive",
                             "adaptive-sweep", "weighted-hybrid", "roundtrip"}));
  cmd_eval->add_option("--k", eval_k, "sample size")->capture_default_str()->check(CLI::PositiveNumber);
  cmd_eval->add_option("--eps", eval_eps, "hybrid threshold parameter (default sqrt(1/k))");
  cmd_eval->add_option("--grid", eval_grid, "eps grid for adaptive")->delimiter(',');
  cmd_eval->add_option("--queries", queries, "random query count (default 1000)");
  cmd_eval->add_option("--oracle-cap", oracle_cap, "refuse exact oracle beyond this size");
  cmd_eval->add_flag("--no-oracle,--no-oracle-cap", no_oracle_cap, "lift the oracle cap");
  cmd_eval->add_option("--weights", eval_weights_path, "node weight file (weighted-hybrid)");
  cmd_eval->add_option("--default-weight", eval_default_weight,
                       "weight for nodes missing from --weights (default 1.0)");

  // ---- sweep ----
  auto* cmd_sweep = app.add_subcommand("sweep", "NRMSE of hybrid over a list of sample sizes");
  CommonOpts c_sweep;
  add_common(cmd_sweep, c_sweep);
  std::vector<std::size_t> k_list{8, 16, 32, 64};
  std::size_t sweep_seeds = 10;
  cmd_sweep->add_option("--k-list", k_list, "sample sizes (default 8,16,32,64)")->delimiter(',');
  cmd_sweep->add_option("--seeds", sweep_seeds, "seeded repetitions per k (default 10)");

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("ccent");
    for (const std::string& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (cmd_exact->parsed()) {
      const LoadedInput in = load_input(c_exact);
      if (c_exact.directed) throw std::invalid_argument("exact requires an undirected graph");
      require_connected_for_estimate(in);
      const ExactCentrality ex = exact_all(in.graph, c_exact.threads);
      EstimateTable t;
      t.sum_est.assign(in.graph.num_nodes(), 0.0);
      t.sqerr_est.assign(in.graph.num_nodes(), 0.0);
      t.exact.assign(in.graph.num_nodes(), 1);
      for (NodeId v = 0; v < in.graph.num_nodes(); ++v)
        t.sum_est[v] = static_cast<double>(ex.sum[v]);
      Output out(c_exact.output);
      write_config_header(out.stream(), "exact", describe(c_exact), c_exact.seed);
      write_estimate_tsv(out.stream(), t, in.original);
      return 0;
    }

    if (cmd_est->parsed()) {
      const LoadedInput in = load_input(c_est);
      const Graph& g = in.graph;
      const double eff_eps = eps > 0 ? eps : default_eps(k);
      EstimateTable t;
      if (method == "roundtrip") {
        if (!c_est.directed)
          throw std::invalid_argument("--method roundtrip requires --directed");
        t = roundtrip_hybrid(g, k, c_est.seed, eff_eps);
      } else {
        if (c_est.directed)
          throw std::invalid_argument("--method " + method +
                                      " requires an undirected graph (see --method roundtrip)");
        require_connected_for_estimate(in);
        if (method == "weighted-hybrid") {
          const std::vector<double> beta =
              load_weights_or_default(weights_path, in.original, default_weight);
          t = estimate_weighted_hybrid(g, beta, varopt_sample(beta, k, c_est.seed), eff_eps);
        } else {
          const SampleSet sample = sample_uniform(g, k, c_est.seed);
          if (method == "sampling") {
            t = estimate_sampling(g, sample);
          } else if (method == "pivoting") {
            t = estimate_pivoting(g, sample, PivotingVariant::kPlain);
          } else if (method == "pivoting-ub") {
            t = estimate_pivoting(g, sample, PivotingVariant::kUpperBound);
          } else if (method == "hybrid") {
            t = estimate_hybrid(g, sample, eff_eps);
          } else if (method == "adaptive") {
            const auto& use_grid =
                grid.empty() ? std::vector<double>(std::begin(kDefaultEpsGrid),
                                                   std::end(kDefaultEpsGrid))
                             : grid;
            t = estimate_adaptive_grid(g, sample, use_grid);
          } else if (method == "adaptive-sweep") {
            t = estimate_adaptive_sweep(g, sample);
          } else {
            throw std::invalid_argument("unknown method " + method);
          }
        }
      }
      Output out(c_est.output);
      std::ostringstream cfg;
      cfg << "method=" << method << " k=" << k << " eps=" << fmt_double(eff_eps) << ' '
          << describe(c_est);
      write_config_header(out.stream(), "estimate", cfg.str(), c_est.seed);
      write_estimate_tsv(out.stream(), t, in.original);
      return 0;
    }

    if (cmd_reach->parsed()) {
      if (!c_reach.directed) throw std::invalid_argument("reach requires --directed");
      const LoadedInput in = load_input(c_reach);
      const ReachDirection dir =
          direction == "outbound" ? ReachDirection::kOutbound : ReachDirection::kInbound;
      Output out(c_reach.output);
      std::ostringstream cfg;
      cfg << "k=" << reach_k << " direction=" << direction << " weighted=" << reach_weighted
          << ' ' << describe(c_reach);
      write_config_header(out.stream(), "reach", cfg.str(), c_reach.seed);
      if (reach_weighted) {
        const std::vector<double> beta =
            load_weights_or_default(reach_weights_path, in.original, reach_default_weight);
        const WeightedReachabilityEstimate r =
            weighted_reachability_estimate(in.graph, beta, reach_k, c_reach.seed, dir);
        out.stream() << "# columns: node_id\tS_hat\tR_hat\tcount\texact_flag\n";
        for (NodeId v = 0; v < in.graph.num_nodes(); ++v)
          out.stream() << in.original[v] << '\t' << fmt_double(r.sum_est[v]) << '\t'
                       << fmt_double(r.reach_est[v]) << '\t' << r.count[v] << '\t'
                       << int(r.exact[v]) << '\n';
      } else {
        const ReachabilityEstimate r = reachability_estimate(in.graph, reach_k, c_reach.seed, dir);
        out.stream() << "# columns: node_id\tB_hat\tR_hat\tcount\texact_flag\n";
        for (NodeId v = 0; v < in.graph.num_nodes(); ++v)
          out.stream() << in.original[v] << '\t' << fmt_double(r.avg_dist[v]) << '\t'
                       << fmt_double(r.reach_est[v]) << '\t' << r.count[v] << '\t'
                       << int(r.exact[v]) << '\n';
      }
      return 0;
    }

    if (cmd_eval->parsed()) {
      const LoadedInput in = load_input(c_eval);
      EvalOptions opts;
      opts.method = *method_from_string(eval_method);
      opts.k = eval_k;
      opts.eps = eval_eps;
      opts.grid = eval_grid;
      opts.queries = queries;
      opts.seed = c_eval.seed;
      opts.oracle_cap = oracle_cap;
      opts.ignore_oracle_cap = no_oracle_cap;
      opts.threads = c_eval.threads;
      if (opts.method == Method::kWeightedHybrid)
        opts.beta = load_weights_or_default(eval_weights_path, in.original, eval_default_weight);
      if (opts.method != Method::kRoundtrip) {
        if (c_eval.directed)
          throw std::invalid_argument("eval of undirected methods requires an undirected graph");
        require_connected_for_estimate(in);
      } else if (!c_eval.directed) {
        throw std::invalid_argument("eval --method roundtrip requires --directed");
      }
      const EvalReport r = evaluate(in.graph, c_eval.input, opts);
      IdMap ids;
      ids.to_input = in.original;
      if (c_eval.output.empty()) {
        write_report_csv(r, std::cout, &ids);
        write_summary(r, std::cout);
      } else {
        std::ofstream main_out(c_eval.output);
        if (!main_out) throw std::runtime_error(c_eval.output + ": cannot open for writing");
        write_report_csv(r, main_out, &ids);
        std::ofstream cdf_out(c_eval.output + ".cdf.csv");
        write_cdf_csv(r, cdf_out);
        std::ofstream sum_out(c_eval.output + ".summary.txt");
        write_summary(r, sum_out);
      }
      return 0;
    }

    if (cmd_sweep->parsed()) {
      const LoadedInput in = load_input(c_sweep);
      if (c_sweep.directed) throw std::invalid_argument("sweep requires an undirected graph");
      require_connected_for_estimate(in);
      const std::vector<SweepRow> rows =
          nrmse_sweep(in.graph, k_list, sweep_seeds, c_sweep.seed, c_sweep.threads);
      Output out(c_sweep.output);
      write_sweep_csv(rows, out.stream());
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ccent
