#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "perron/bounds.hpp"
#include "perron/errors.hpp"
#include "perron/graph_io.hpp"
#include "perron/paper_check.hpp"
#include "perron/render.hpp"
#include "perron/sweep.hpp"

namespace {

// Exit-code contract: 0 verified, 1 input error, 2 bound violation,
// 3 solver non-convergence.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitSolver = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw perron::InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

perron::Graph load_graph(const std::string& text, const std::string& format) {
  if (format == "graph6") {
    const std::vector<perron::Graph> graphs =
        perron::parse_graph_text({perron::GraphTextFormat::Graph6, text});
    if (graphs.size() > 1)
      std::cerr << "note: input holds " << graphs.size() - 1
                << " more graph6 record(s); only the first is reported (use 'verify --graph6' "
                   "for streams)\n";
    return graphs.front();
  }
  perron::ParsedEdgeList parsed = perron::parse_edge_list(text);
  if (parsed.duplicate_edges > 0)
    std::cerr << "warning: collapsed " << parsed.duplicate_edges << " duplicate edge(s)\n";
  return parsed.graph;
}

double fraction(std::uint64_t part, std::uint64_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

void print_sweep_summary(const perron::SweepStats& stats) {
  std::printf("graphs checked: %llu\n", static_cast<unsigned long long>(stats.graphs_checked));
  std::printf("violations: %zu\n", stats.violations.size());
  for (const perron::Violation& v : stats.violations)
    std::printf("  %s vertex %d: %s by %.3e\n", v.graph.c_str(), v.vertex, v.inequality.c_str(),
                v.magnitude);
  std::printf("worst slack consumed: %.3e\n", stats.worst_slack_consumed);
  if (stats.min_gap_pr != std::numeric_limits<double>::infinity()) {
    std::printf("tightest gaps: pr %.3e, cg %.3e, lwm %.3e, new %.3e\n", stats.min_gap_pr,
                stats.min_gap_cg, stats.min_gap_lwm, stats.min_gap_new);
    std::printf("max |exact_sq - x^2|: %.3e\n", stats.max_exact_identity_error);
    std::printf("lower-bound winners by degree (new / lwm / tie):\n");
    for (const auto& [degree, tally] : stats.winners_by_degree) {
      const std::uint64_t total = tally.new_wins + tally.lwm_wins + tally.ties;
      std::printf("  degree %2d: %8llu / %8llu / %8llu   (new wins %.1f%%)\n", degree,
                  static_cast<unsigned long long>(tally.new_wins),
                  static_cast<unsigned long long>(tally.lwm_wins),
                  static_cast<unsigned long long>(tally.ties),
                  100.0 * fraction(tally.new_wins, total));
    }
  }
}

int run_report(const std::string& path, const std::string& format, const std::string& output,
               const perron::SolverConfig& cfg) {
  const perron::Graph g = load_graph(read_input(path), format);
  const perron::BoundsReport report = perron::analyze(g, cfg);
  const std::vector<perron::Violation> violations = perron::verify_report(report, cfg);
  if (output == "csv")
    std::cout << perron::render_csv(report);
  else if (output == "json")
    std::cout << perron::render_json(report, violations) << '\n';
  else
    std::cout << perron::render_text(report, violations);
  return violations.empty() ? kExitOk : kExitViolation;
}

int run_paper_check() {
  const perron::PaperCheckResult result = perron::paper_check();
  const auto& rows = perron::paper_table();
  std::printf("embedded reference table: %zu rows\n", rows.size());
  std::printf("%-6s %-6s %-10s %-10s %-12s %-12s %-12s\n", "name", "deg", "rho_est", "rho_i",
              "new_printed", "new_recomp", "|error|");
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::printf("%-6s %-6d %-10.5f %-10.5f %-12.6g %-12.6g %-12.3e\n", rows[i].name.c_str(),
                rows[i].degree, result.inferred_rho_per_row[i], result.inferred_rho_i[i],
                rows[i].new_bound, result.recomputed_new[i],
                std::abs(result.recomputed_new[i] - rows[i].new_bound));
  std::printf("rho median: %.6f   rho spread: %.3e (limit 5e-4)\n", result.rho_median,
              result.rho_spread);
  std::printf("max |recomputed new - printed|: %.3e (limit 1e-4)\n", result.max_abs_error_new);
  bool all_ordered = true;
  for (bool ok : result.ordering_ok) all_ordered = all_ordered && ok;
  std::printf("row orderings max(lwm,new) <= x <= cg <= 1/sqrt(2): %s\n",
              all_ordered ? "all hold" : "VIOLATED");
  std::printf("paper-check: %s\n", result.pass ? "PASS" : "FAIL");
  return result.pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds on the entries of the principal eigenvector of a connected graph"};
  app.require_subcommand(1);

  perron::SolverConfig cfg;
  long max_iter = cfg.max_iterations;
  bool no_fallback = false;
  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--tol", cfg.verify_slack, "verification slack (default 1e-9)");
    cmd->add_option("--residual-tol", cfg.residual_tol, "eigensolver residual target (default 1e-12)");
    cmd->add_option("--max-iter", max_iter, "power-iteration cap (default 1e6)");
    cmd->add_flag("--no-fallback", no_fallback, "fail instead of using the dense oracle fallback");
  };

  // report
  std::string input_path;
  std::string format = "edgelist";
  std::string output = "text";
  CLI::App* report = app.add_subcommand("report", "per-vertex bound table for one graph");
  report->add_option("input", input_path, "input file, or '-' for stdin")->required();
  report
      ->add_option("--format", format,
                   "input format (default edgelist: 'n m' header, then m lines 'u v' with "
                   "0-based endpoints)")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  report->add_option("--output", output, "output format (default text)")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  add_solver_flags(report);

  // verify
  bool exhaustive = false;
  bool random_mode = false;
  std::string graph6_path;
  int sweep_n = 0;
  double edge_p = 0.5;
  int count = 100;
  std::uint64_t seed = 1;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  int cap = perron::kDefaultEnumerationCap;
  CLI::App* verify = app.add_subcommand("verify", "bulk verification over a stream of graphs");
  verify->add_flag("--exhaustive", exhaustive, "all labeled connected graphs on n vertices");
  verify->add_flag("--random", random_mode, "seeded random connected graphs");
  verify->add_option("--graph6", graph6_path, "verify a graph6 catalog file ('-' for stdin)");
  verify->add_option("--n", sweep_n, "vertex count");
  verify->add_option("--p", edge_p, "edge probability for --random (default 0.5)");
  verify->add_option("--count", count, "number of random graphs (default 100)");
  verify->add_option("--seed", seed, "base seed for --random (graph k uses seed+k)");
  verify->add_option("--threads", threads, "worker threads (default: hardware)");
  verify->add_option("--cap", cap, "exhaustive enumeration cap (default 7, max 11)");
  add_solver_flags(verify);

  CLI::App* paper = app.add_subcommand("paper-check", "internal consistency of the embedded reference table");
  (void)paper;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help/usage
    return code == 0 ? kExitOk : kExitInput;
  }
  cfg.max_iterations = max_iter;
  cfg.oracle_fallback = !no_fallback;

  try {
    if (report->parsed()) return run_report(input_path, format, output, cfg);
    if (paper->parsed()) return run_paper_check();

    // verify
    perron::SweepOptions options{cfg, std::max(1, threads), cap};
    const int modes = int(exhaustive) + int(random_mode) + int(!graph6_path.empty());
    if (modes != 1)
      throw perron::InputError("pick exactly one of --exhaustive, --random, --graph6");
    perron::SweepStats stats;
    if (exhaustive) {
      if (sweep_n < 1) throw perron::InputError("--exhaustive needs --n <k>");
      std::printf("verify: exhaustive n=%d\n", sweep_n);
      stats = perron::sweep_exhaustive(sweep_n, options);
    } else if (random_mode) {
      if (sweep_n < 1) throw perron::InputError("--random needs --n <k>");
      std::printf("verify: random n=%d p=%g count=%d seed=%llu\n", sweep_n, edge_p, count,
                  static_cast<unsigned long long>(seed));
      stats = perron::sweep_random(sweep_n, edge_p, count, seed, options);
    } else {
      const std::vector<perron::Graph> graphs = perron::parse_graph_text(
          {perron::GraphTextFormat::Graph6, read_input(graph6_path)});
      for (std::size_t i = 0; i < graphs.size(); ++i)
        if (!perron::is_connected(graphs[i]))
          throw perron::InputError("catalog record " + std::to_string(i + 1) +
                                   " is disconnected");
      std::printf("verify: graph6 catalog '%s' (%zu graphs)\n", graph6_path.c_str(),
                  graphs.size());
      stats = perron::sweep_graphs(graphs, options);
    }
    print_sweep_summary(stats);
    return stats.violations.empty() ? kExitOk : kExitViolation;
  } catch (const perron::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const perron::ConditioningError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const perron::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
