#include "perron/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <tuple>

#include "perron/errors.hpp"
#include "perron/graph_io.hpp"

namespace perron {

namespace {

constexpr double kSignTol = 1e-10;

void track_min(double& slot, double value) { slot = std::min(slot, value); }

}  // namespace

void SweepStats::accumulate(const BoundsReport& report, const SolverConfig& cfg) {
  ++graphs_checked;
  std::vector<Violation> found = verify_report(report, cfg);
  violations.insert(violations.end(), found.begin(), found.end());

  const int n = report.graph.vertex_count();
  if (n < 2) return;

  track_min(min_gap_pr, kMaxEntryBound - report.x_max);
  worst_slack_consumed = std::max(worst_slack_consumed, report.x_max - kMaxEntryBound);
  if (!report.pr_equality) max_nonstar_xmax = std::max(max_nonstar_xmax, report.x_max);

  const double rho = report.spectral.rho;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const VertexBounds& row = report.rows[i];
    track_min(min_gap_cg, row.upper_cg - row.actual);
    track_min(min_gap_lwm, row.actual - row.lower_lwm);
    track_min(min_gap_new, row.actual - row.lower_new);
    if (!report.cg_equality_flags[i]) track_min(min_strict_cg_margin, row.upper_cg - row.actual);
    worst_slack_consumed = std::max({worst_slack_consumed, row.lower_lwm - row.actual,
                                     row.lower_new - row.actual, row.actual - row.upper_cg});
    max_exact_identity_error =
        std::max(max_exact_identity_error, std::abs(row.exact_sq - row.actual * row.actual));

    // Winner of the two lower bounds is determined by the sign of
    // rho^2 - rho_i^2 - d_i; count clear contradictions.
    const double bound_diff = row.lower_new - row.lower_lwm;
    const double sign_proxy = rho * rho - row.rho_deleted * row.rho_deleted - row.degree;
    if ((bound_diff > kSignTol && sign_proxy < -kSignTol) ||
        (bound_diff < -kSignTol && sign_proxy > kSignTol)) {
      ++comparison_mismatches;
      if (first_mismatch.empty())
        first_mismatch = (report.graph.vertex_count() <= 62 ? encode_graph6(report.graph)
                                                            : std::string("n>62")) +
                         " vertex " + std::to_string(row.vertex);
    }

    WinnerCounts& tally = winners_by_degree[row.degree];
    switch (report.winner_per_vertex[i]) {
      case LowerBoundWinner::New: ++tally.new_wins; break;
      case LowerBoundWinner::Lwm: ++tally.lwm_wins; break;
      case LowerBoundWinner::Tie: ++tally.ties; break;
    }
  }
}

void SweepStats::merge(const SweepStats& other) {
  graphs_checked += other.graphs_checked;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  worst_slack_consumed = std::max(worst_slack_consumed, other.worst_slack_consumed);
  min_gap_pr = std::min(min_gap_pr, other.min_gap_pr);
  min_gap_cg = std::min(min_gap_cg, other.min_gap_cg);
  min_gap_lwm = std::min(min_gap_lwm, other.min_gap_lwm);
  min_gap_new = std::min(min_gap_new, other.min_gap_new);
  min_strict_cg_margin = std::min(min_strict_cg_margin, other.min_strict_cg_margin);
  max_exact_identity_error = std::max(max_exact_identity_error, other.max_exact_identity_error);
  max_nonstar_xmax = std::max(max_nonstar_xmax, other.max_nonstar_xmax);
  comparison_mismatches += other.comparison_mismatches;
  if (first_mismatch.empty()) first_mismatch = other.first_mismatch;
  for (const auto& [degree, counts] : other.winners_by_degree) {
    WinnerCounts& tally = winners_by_degree[degree];
    tally.new_wins += counts.new_wins;
    tally.lwm_wins += counts.lwm_wins;
    tally.ties += counts.ties;
  }
}

SweepStats sweep_exhaustive(int n, const SweepOptions& options) {
  // Constructor validates n against the cap before any work starts.
  ConnectedGraphEnumerator probe(n, options.enumeration_cap);
  const std::uint64_t total = pair_mask_count(n);
  const int threads = std::max(1, options.threads);

  if (threads == 1 || total < 4096) {
    SweepStats stats;
    for (std::optional<Graph> g = probe.next(); g; g = probe.next())
      stats.accumulate(analyze(*g, options.cfg), options.cfg);
    return stats;
  }

  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 16);
  const std::uint64_t chunk_size = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> next_chunk{0};
  std::vector<SweepStats> partial(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (;;) {
        const std::uint64_t chunk = next_chunk.fetch_add(1);
        if (chunk >= chunks) return;
        const std::uint64_t begin = chunk * chunk_size;
        const std::uint64_t end = std::min(total, begin + chunk_size);
        ConnectedGraphEnumerator range(n, begin, end, options.enumeration_cap);
        for (std::optional<Graph> g = range.next(); g; g = range.next())
          partial[t].accumulate(analyze(*g, options.cfg), options.cfg);
      }
    });
  for (std::thread& worker : pool) worker.join();

  SweepStats stats;
  for (const SweepStats& part : partial) stats.merge(part);
  std::sort(stats.violations.begin(), stats.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.graph, a.vertex, a.inequality) <
                     std::tie(b.graph, b.vertex, b.inequality);
            });
  return stats;
}

SweepStats sweep_random(int n, double p, int count, std::uint64_t seed,
                        const SweepOptions& options) {
  if (count < 0) throw InputError("count must be >= 0");
  std::vector<Graph> graphs;
  graphs.reserve(count);
  for (int k = 0; k < count; ++k) graphs.push_back(random_connected(n, p, seed + k));
  return sweep_graphs(graphs, options);
}

SweepStats sweep_graphs(const std::vector<Graph>& graphs, const SweepOptions& options) {
  const int threads = std::max(1, options.threads);
  if (threads == 1 || graphs.size() < 8) {
    SweepStats stats;
    for (const Graph& g : graphs) stats.accumulate(analyze(g, options.cfg), options.cfg);
    return stats;
  }

  std::atomic<std::size_t> next{0};
  std::vector<SweepStats> partial(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= graphs.size()) return;
        partial[t].accumulate(analyze(graphs[k], options.cfg), options.cfg);
      }
    });
  for (std::thread& worker : pool) worker.join();

  SweepStats stats;
  for (const SweepStats& part : partial) stats.merge(part);
  return stats;
}

}  // namespace perron
