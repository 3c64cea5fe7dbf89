#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "perron/bounds.hpp"

namespace perron {

struct WinnerCounts {
  std::uint64_t new_wins = 0;
  std::uint64_t lwm_wins = 0;
  std::uint64_t ties = 0;
};

/// Aggregated results of verifying a stream of graphs. All fields merge
/// commutatively, so sweeps can run chunked across workers.
struct SweepStats {
  std::uint64_t graphs_checked = 0;
  std::vector<Violation> violations;

  // How much of the allowed slack any soft inequality actually needed.
  double worst_slack_consumed = 0.0;
  // Tightest observed gap per bound (can be ~0 where a bound is attained).
  double min_gap_pr = std::numeric_limits<double>::infinity();
  double min_gap_cg = std::numeric_limits<double>::infinity();
  double min_gap_lwm = std::numeric_limits<double>::infinity();
  double min_gap_new = std::numeric_limits<double>::infinity();
  // Strict-inequality margin for vertices where the upper-bound equality
  // conditions do not hold.
  double min_strict_cg_margin = std::numeric_limits<double>::infinity();
  double max_exact_identity_error = 0.0;
  // Largest x_max over non-star graphs (stars attain the 1/sqrt(2) bound).
  double max_nonstar_xmax = 0.0;

  // sign(new - lwm) vs sign(rho^2 - rho_i^2 - d): contradictions counted.
  std::uint64_t comparison_mismatches = 0;
  std::string first_mismatch;

  std::map<int, WinnerCounts> winners_by_degree;

  void accumulate(const BoundsReport& report, const SolverConfig& cfg);
  void merge(const SweepStats& other);
};

struct SweepOptions {
  SolverConfig cfg;
  int threads = 1;
  int enumeration_cap = kDefaultEnumerationCap;
};

/// Analyzes and verifies every labeled connected graph on n vertices.
SweepStats sweep_exhaustive(int n, const SweepOptions& options = {});

/// Analyzes and verifies `count` seeded random connected graphs; graph k is
/// random_connected(n, p, seed + k), so reruns are identical.
SweepStats sweep_random(int n, double p, int count, std::uint64_t seed,
                        const SweepOptions& options = {});

/// Analyzes and verifies an explicit list of (connected) graphs.
SweepStats sweep_graphs(const std::vector<Graph>& graphs, const SweepOptions& options = {});

}  // namespace perron
