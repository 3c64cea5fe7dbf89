#include "perron/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "perron/errors.hpp"
#include "perron/graph_io.hpp"

namespace perron {

namespace {

constexpr double kExactIdentityTol = 1e-8;
constexpr double kCgEqualityTol = 1e-9;
constexpr double kPrEqualityTol = 1e-10;
constexpr double kXMaxMatchTol = 1e-10;

void require_deletable(const Graph& g, Vertex v) {
  if (g.vertex_count() < 2)
    throw DomainError("per-vertex bounds need n >= 2: deleting the only vertex leaves nothing");
  if (v < 0 || v >= g.vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(g.vertex_count()) + ")");
}

std::vector<double> neighbor_indicator(const Graph& g, Vertex v) {
  std::vector<double> b(g.vertex_count() - 1, 0.0);
  for (Vertex u : g.neighbors(v)) b[u < v ? u : u - 1] = 1.0;
  return b;
}

double squared_norm(const std::vector<double>& y) {
  double s = 0.0;
  for (double yi : y) s += yi * yi;
  return s;
}

std::string graph_id(const Graph& g) {
  if (g.vertex_count() <= 62) return encode_graph6(g);
  return "n=" + std::to_string(g.vertex_count()) + ",m=" + std::to_string(g.edge_count());
}

}  // namespace

VertexBounds vertex_bounds(const Graph& g, const SpectralResult& spec, Vertex v,
                           const SolverConfig& cfg) {
  require_deletable(g, v);
  VertexBounds row;
  row.vertex = v;
  row.degree = g.degree(v);
  row.rho_deleted = spectral_radius_any(delete_vertex(g, v), cfg);
  const double gap = spec.rho - row.rho_deleted;
  row.lower_lwm = std::sqrt(gap / (2.0 * spec.rho));
  row.lower_new = 1.0 / std::sqrt(1.0 + row.degree / (gap * gap));
  row.upper_cg = 1.0 / std::sqrt(1.0 + spec.rho * spec.rho / row.degree);
  row.exact_sq = taovu_exact(g, spec, v, cfg);
  row.actual = spec.eigenvector[v];
  return row;
}

double taovu_exact(const Graph& g, const SpectralResult& spec, Vertex v,
                   const SolverConfig& cfg) {
  require_deletable(g, v);
  const Graph deleted = delete_vertex(g, v);
  const std::vector<double> y = spd_solve(spec.rho, deleted, neighbor_indicator(g, v), cfg);
  return 1.0 / (1.0 + squared_norm(y));
}

ProofChain proof_chain_check(const Graph& g, const SpectralResult& spec, Vertex v,
                             const SolverConfig& cfg) {
  require_deletable(g, v);
  const Graph deleted = delete_vertex(g, v);
  const double rho_v = spectral_radius_any(deleted, cfg);
  const double gap = spec.rho - rho_v;
  const std::vector<double> y = spd_solve(spec.rho, deleted, neighbor_indicator(g, v), cfg);

  ProofChain chain;
  chain.t1 = squared_norm(y);
  chain.t2 = g.degree(v) / (gap * gap);  // ||b||^2 = d_v
  chain.exact_sq = 1.0 / (1.0 + chain.t1);
  return chain;
}

bool check_cg_equality(const Graph& g, const SpectralResult& spec, Vertex v) {
  require_deletable(g, v);
  if (g.degree(v) != g.vertex_count() - 1) return false;
  if (!is_regular(delete_vertex(g, v)).has_value()) return false;
  const double x_max = *std::max_element(spec.eigenvector.begin(), spec.eigenvector.end());
  return spec.eigenvector[v] >= x_max - kXMaxMatchTol;
}

BoundsReport analyze(const Graph& g, const SolverConfig& cfg) {
  const ComponentPartition parts = connected_components(g);
  if (parts.components.size() != 1) {
    std::ostringstream msg;
    msg << "graph is disconnected; components:";
    for (const auto& comp : parts.components) {
      msg << " {";
      for (std::size_t i = 0; i < comp.size(); ++i) msg << (i ? "," : "") << comp[i];
      msg << "}";
    }
    throw DomainError(msg.str());
  }

  BoundsReport report(g, principal_eigenpair(g, cfg));
  report.x_max =
      *std::max_element(report.spectral.eigenvector.begin(), report.spectral.eigenvector.end());
  report.pr_equality = is_star(g);

  const int n = g.vertex_count();
  if (n == 1) {
    report.note =
        "single-vertex graph: the vertex-deleted subgraph does not exist, so per-vertex "
        "bounds are not defined; only the trivial eigenpair (rho = 0, x = 1) is reported";
    return report;
  }

  report.rows.reserve(n);
  report.cg_equality_flags.reserve(n);
  report.winner_per_vertex.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    report.rows.push_back(vertex_bounds(g, report.spectral, v, cfg));
    report.cg_equality_flags.push_back(check_cg_equality(g, report.spectral, v) ? 1 : 0);
    const VertexBounds& row = report.rows.back();
    if (std::abs(row.lower_new - row.lower_lwm) <= kWinnerTieTol)
      report.winner_per_vertex.push_back(LowerBoundWinner::Tie);
    else
      report.winner_per_vertex.push_back(row.lower_new > row.lower_lwm ? LowerBoundWinner::New
                                                                       : LowerBoundWinner::Lwm);
  }
  return report;
}

std::vector<Violation> verify_report(const BoundsReport& report, const SolverConfig& cfg) {
  if (cfg.verify_slack < 0.0) throw InputError("verify_slack must be >= 0");
  const double slack = cfg.verify_slack;
  std::vector<Violation> out;
  const std::string id = graph_id(report.graph);
  auto flag = [&out, &id](Vertex v, const std::string& inequality, double magnitude) {
    out.push_back({id, v, inequality, magnitude});
  };

  const int n = report.graph.vertex_count();
  const SpectralResult& spec = report.spectral;

  double norm_sq = 0.0;
  double min_entry = 1.0;
  for (double xi : spec.eigenvector) {
    norm_sq += xi * xi;
    min_entry = std::min(min_entry, xi);
  }
  if (std::abs(norm_sq - 1.0) > 1e-12) flag(-1, "unit_norm", std::abs(norm_sq - 1.0));
  if (min_entry <= 0.0) flag(-1, "positivity", -min_entry);
  if (spec.residual > cfg.residual_tol) flag(-1, "residual", spec.residual - cfg.residual_tol);

  if (n == 1) return out;  // no per-vertex statements for a single vertex

  if (static_cast<int>(report.rows.size()) != n)
    flag(-1, "row_coverage", std::abs(static_cast<int>(report.rows.size()) - n));

  if (report.x_max > kMaxEntryBound + slack)
    flag(-1, "pr_upper", report.x_max - kMaxEntryBound);
  if (report.pr_equality && std::abs(report.x_max - kMaxEntryBound) > kPrEqualityTol)
    flag(-1, "pr_equality", std::abs(report.x_max - kMaxEntryBound));

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const VertexBounds& row = report.rows[i];
    const Vertex v = row.vertex;
    if (!(row.lower_lwm > 0.0)) flag(v, "lwm_positive", -row.lower_lwm);
    if (!(row.lower_new > 0.0)) flag(v, "new_positive", -row.lower_new);
    if (row.lower_lwm > row.actual + slack) flag(v, "lwm_lower", row.lower_lwm - row.actual);
    if (row.lower_new > row.actual + slack) flag(v, "new_lower", row.lower_new - row.actual);
    if (row.actual > row.upper_cg + slack) flag(v, "cg_upper", row.actual - row.upper_cg);
    const double exact_err = std::abs(row.exact_sq - row.actual * row.actual);
    if (exact_err > kExactIdentityTol) flag(v, "exact_identity", exact_err);
    if (!(row.rho_deleted < spec.rho)) flag(v, "interlacing", row.rho_deleted - spec.rho);
    if (i < report.cg_equality_flags.size() && report.cg_equality_flags[i] &&
        std::abs(row.actual - row.upper_cg) > kCgEqualityTol)
      flag(v, "cg_equality", std::abs(row.actual - row.upper_cg));
  }
  return out;
}

}  // namespace perron
