#pragma once

#include <string>
#include <vector>

#include "perron/graph.hpp"
#include "perron/spectral.hpp"

namespace perron {

/// 1/sqrt(2), the universal upper bound on the largest eigenvector entry;
/// attained exactly by stars.
inline const double kMaxEntryBound = 0.7071067811865476;

/// Per-vertex record: degree, spectral radius of the vertex-deleted
/// subgraph, the two lower bounds, the upper bound, the exact value of
/// x_v^2 from the shifted-solve identity, and the actual entry.
struct VertexBounds {
  Vertex vertex = 0;
  int degree = 0;
  double rho_deleted = 0.0;  // rho_v = spectral radius of G with v deleted
  double lower_lwm = 0.0;    // sqrt((rho - rho_v) / (2 rho))
  double lower_new = 0.0;    // 1 / sqrt(1 + d_v / (rho - rho_v)^2)
  double upper_cg = 0.0;     // 1 / sqrt(1 + rho^2 / d_v)
  double exact_sq = 0.0;     // 1 / (1 + ||(rho I - B)^-1 b||^2)
  double actual = 0.0;       // x_v
};

enum class LowerBoundWinner { Lwm, New, Tie };

/// The two sides of the Cauchy–Schwarz step that turns the exact identity
/// into the degree/gap lower bound: t1 = ||(rho I - B)^-1 b||^2 and
/// t2 = ||(rho I - B)^-1||^2 ||b||^2 = d_v / (rho - rho_v)^2, with t1 <= t2
/// and exact_sq = 1 / (1 + t1).
struct ProofChain {
  double t1 = 0.0;
  double t2 = 0.0;
  double exact_sq = 0.0;
};

/// One failed inequality: which graph, which vertex (-1 for graph-level
/// checks), which check, and by how much.
struct Violation {
  std::string graph;
  Vertex vertex = -1;
  std::string inequality;
  double magnitude = 0.0;
};

struct BoundsReport {
  BoundsReport(Graph g, SpectralResult spec)
      : graph(std::move(g)), spectral(std::move(spec)) {}

  Graph graph;
  SpectralResult spectral;
  std::vector<VertexBounds> rows;  // empty for n = 1 (see note)
  double x_max = 0.0;
  double pr_upper = kMaxEntryBound;
  bool pr_equality = false;                       // star detection
  std::vector<char> cg_equality_flags;            // per vertex
  std::vector<LowerBoundWinner> winner_per_vertex;
  std::string note;  // set for n = 1, where per-vertex bounds are undefined
};

/// Evaluates every bound formula at vertex v. Requires n >= 2 and spec to be
/// the eigenpair of g.
VertexBounds vertex_bounds(const Graph& g, const SpectralResult& spec, Vertex v,
                           const SolverConfig& cfg = {});

/// Exact value of x_v^2 via the partitioned-eigenvector identity: with B the
/// adjacency matrix of G minus v and b the indicator of v's neighbors there,
/// x_v^2 = 1 / (1 + ||(rho I - B)^-1 b||^2). Well-posed because rho exceeds
/// every eigenvalue of B when g is connected.
double taovu_exact(const Graph& g, const SpectralResult& spec, Vertex v,
                   const SolverConfig& cfg = {});

ProofChain proof_chain_check(const Graph& g, const SpectralResult& spec, Vertex v,
                             const SolverConfig& cfg = {});

/// Equality test for the per-entry upper bound: d_v = n - 1, the deleted
/// subgraph is regular, and x_v is the maximal entry.
bool check_cg_equality(const Graph& g, const SpectralResult& spec, Vertex v);

/// Full per-graph analysis. Throws DomainError (naming the components) for
/// disconnected input. For n = 1 the report carries the trivial eigenpair
/// and an explanatory note instead of rows.
BoundsReport analyze(const Graph& g, const SolverConfig& cfg = {});

/// Machine-checks every report invariant within cfg.verify_slack and returns
/// the violations found (empty means verified). Violations are data, not
/// errors.
std::vector<Violation> verify_report(const BoundsReport& report, const SolverConfig& cfg = {});

/// Tie threshold for declaring the two lower bounds equal; exact ties are a
/// real phenomenon (d_v = rho^2 - rho_v^2, e.g. 4-cycles and star leaves).
inline constexpr double kWinnerTieTol = 1e-12;

}  // namespace perron
