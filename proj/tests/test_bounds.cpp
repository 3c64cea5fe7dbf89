#include <cmath>

#include <doctest.h>

#include "perron/bounds.hpp"
#include "perron/errors.hpp"
#include "perron/graph_io.hpp"

using namespace perron;

namespace {

const VertexBounds& row_of(const BoundsReport& report, Vertex v) { return report.rows[v]; }

bool has_violation(const std::vector<Violation>& violations, const std::string& inequality) {
  for (const Violation& v : violations)
    if (v.inequality == inequality) return true;
  return false;
}

}  // namespace

TEST_CASE("vertex_bounds on fixed graphs") {
  const Graph k4 = named_graph(GraphFamily::Complete, 4);
  const SpectralResult k4_spec = principal_eigenpair(k4);
  const VertexBounds k4_row = vertex_bounds(k4, k4_spec, 0);
  CHECK(k4_row.degree == 3);
  CHECK(std::abs(k4_spec.rho - 3.0) < 1e-12);
  CHECK(std::abs(k4_row.rho_deleted - 2.0) < 1e-12);
  CHECK(std::abs(k4_row.lower_new - 0.5) < 1e-12);  // tight on complete graphs
  CHECK(std::abs(k4_row.actual - 0.5) < 1e-12);

  const Graph p4 = named_graph(GraphFamily::Path, 4);
  const SpectralResult p4_spec = principal_eigenpair(p4);
  const VertexBounds end = vertex_bounds(p4, p4_spec, 0);
  CHECK(end.degree == 1);
  CHECK(std::abs(end.rho_deleted - std::sqrt(2.0)) < 1e-11);
  CHECK(std::abs(end.lower_new - 0.1997140) < 1e-6);
  CHECK(std::abs(end.lower_lwm - 0.2509660) < 1e-6);
  CHECK(std::abs(end.upper_cg - 0.5257311) < 1e-6);
  CHECK(std::abs(end.actual - 0.3717480) < 1e-6);

  // star center: new bound, actual, and upper bound all coincide at 1/sqrt(2)
  const Graph star5 = named_graph(GraphFamily::Star, 5);
  const SpectralResult star_spec = principal_eigenpair(star5);
  const VertexBounds center = vertex_bounds(star5, star_spec, 0);
  CHECK(center.degree == 4);
  CHECK(std::abs(star_spec.rho - 2.0) < 1e-11);
  CHECK(std::abs(center.rho_deleted) < 1e-12);
  CHECK(std::abs(center.lower_new - kMaxEntryBound) < 1e-10);
  CHECK(std::abs(center.actual - kMaxEntryBound) < 1e-10);
  CHECK(std::abs(center.upper_cg - kMaxEntryBound) < 1e-10);

  CHECK_THROWS_AS(vertex_bounds(Graph(1), principal_eigenpair(Graph(1)), 0), DomainError);
  CHECK_THROWS_AS(vertex_bounds(p4, p4_spec, 9), InputError);
}

TEST_CASE("taovu_exact identities") {
  const Graph p3 = named_graph(GraphFamily::Path, 3);
  const SpectralResult p3_spec = principal_eigenpair(p3);
  CHECK(std::abs(taovu_exact(p3, p3_spec, 1) - 0.5) < 1e-10);  // center of P_3

  const Graph k4 = named_graph(GraphFamily::Complete, 4);
  const SpectralResult k4_spec = principal_eigenpair(k4);
  for (int v = 0; v < 4; ++v) CHECK(std::abs(taovu_exact(k4, k4_spec, v) - 0.25) < 1e-12);

  const Graph p4 = named_graph(GraphFamily::Path, 4);
  const SpectralResult p4_spec = principal_eigenpair(p4);
  const double end_sq = taovu_exact(p4, p4_spec, 0);
  CHECK(std::abs(end_sq - 0.1381966) < 1e-7);
  // identity, not a bound: matches the oracle entry squared
  const EigenDecomposition eig = dense_eigen_oracle(p4);
  CHECK(std::abs(end_sq - eig.vector_entry(0, 0) * eig.vector_entry(0, 0)) < 1e-10);
}

TEST_CASE("proof chain quantities") {
  const Graph k4 = named_graph(GraphFamily::Complete, 4);
  const ProofChain k4_chain = proof_chain_check(k4, principal_eigenpair(k4), 0);
  CHECK(std::abs(k4_chain.t1 - 3.0) < 1e-10);
  CHECK(std::abs(k4_chain.t2 - 3.0) < 1e-10);  // Cauchy–Schwarz equality: b is flat

  const Graph star5 = named_graph(GraphFamily::Star, 5);
  const ProofChain star_chain = proof_chain_check(star5, principal_eigenpair(star5), 0);
  CHECK(std::abs(star_chain.t1 - 1.0) < 1e-10);
  CHECK(std::abs(star_chain.t2 - 1.0) < 1e-10);

  const Graph p4 = named_graph(GraphFamily::Path, 4);
  const ProofChain end_chain = proof_chain_check(p4, principal_eigenpair(p4), 0);
  CHECK(std::abs(end_chain.t1 - 6.2360680) < 1e-6);
  CHECK(std::abs(end_chain.t2 - 24.0716) < 1e-3);
  CHECK(end_chain.t1 <= end_chain.t2);
  CHECK(std::abs(end_chain.exact_sq - 1.0 / (1.0 + end_chain.t1)) < 1e-15);
}

TEST_CASE("upper-bound equality detector") {
  for (int n = 2; n <= 6; ++n) {
    const Graph kn = named_graph(GraphFamily::Complete, n);
    const SpectralResult spec = principal_eigenpair(kn);
    for (int v = 0; v < n; ++v) {
      CHECK(check_cg_equality(kn, spec, v));
      const VertexBounds row = vertex_bounds(kn, spec, v);
      CHECK(std::abs(row.actual - row.upper_cg) < 1e-9);
    }
  }
  const Graph star6 = named_graph(GraphFamily::Star, 6);
  const SpectralResult star_spec = principal_eigenpair(star6);
  CHECK(check_cg_equality(star6, star_spec, 0));   // center: deleted graph is 0-regular
  CHECK_FALSE(check_cg_equality(star6, star_spec, 1));
  const Graph p4 = named_graph(GraphFamily::Path, 4);
  CHECK_FALSE(check_cg_equality(p4, principal_eigenpair(p4), 0));
}

TEST_CASE("analyze on fixed graphs") {
  const BoundsReport star10 = analyze(named_graph(GraphFamily::Star, 10));
  CHECK(star10.pr_equality);
  CHECK(std::abs(star10.x_max - 0.7071068) < 1e-7);

  const BoundsReport c4 = analyze(named_graph(GraphFamily::Cycle, 4));
  for (int v = 0; v < 4; ++v) {
    CHECK(std::abs(row_of(c4, v).lower_lwm - 0.3826834) < 1e-7);
    CHECK(std::abs(row_of(c4, v).lower_new - 0.3826834) < 1e-7);
    CHECK(std::abs(row_of(c4, v).actual - 0.5) < 1e-12);
    CHECK(c4.winner_per_vertex[v] == LowerBoundWinner::Tie);  // d = rho^2 - rho_i^2 exactly
  }

  const BoundsReport k3 = analyze(named_graph(GraphFamily::Complete, 3));
  CHECK(std::abs(row_of(k3, 0).lower_new - 0.5773503) < 1e-7);
  CHECK(std::abs(row_of(k3, 0).lower_new - row_of(k3, 0).actual) < 1e-12);
  CHECK(std::abs(row_of(k3, 0).lower_lwm - 0.5) < 1e-12);
  CHECK(k3.winner_per_vertex[0] == LowerBoundWinner::New);

  const BoundsReport p4 = analyze(named_graph(GraphFamily::Path, 4));
  CHECK(p4.winner_per_vertex[0] == LowerBoundWinner::Lwm);

  const BoundsReport k1 = analyze(Graph(1));
  CHECK(k1.rows.empty());
  CHECK_FALSE(k1.note.empty());
  CHECK(k1.x_max == 1.0);
  CHECK_FALSE(k1.pr_equality);
  CHECK(verify_report(k1).empty());

  CHECK_THROWS_WITH_AS(analyze(graph_from_edges(3, {{0, 1}})), doctest::Contains("{2}"),
                       DomainError);
}

TEST_CASE("verify_report passes on sound reports and flags injected faults") {
  CHECK(verify_report(analyze(named_graph(GraphFamily::Complete, 5))).empty());
  CHECK(verify_report(analyze(named_graph(GraphFamily::Path, 4))).empty());

  BoundsReport corrupted = analyze(named_graph(GraphFamily::Path, 4));
  corrupted.rows[0].actual = corrupted.rows[0].lower_new - 1e-3;
  const auto violations = verify_report(corrupted);
  CHECK(has_violation(violations, "new_lower"));

  BoundsReport inflated = analyze(named_graph(GraphFamily::Star, 6));
  inflated.x_max = 0.75;
  CHECK(has_violation(verify_report(inflated), "pr_upper"));

  BoundsReport drifted = analyze(named_graph(GraphFamily::Complete, 4));
  drifted.rows[2].rho_deleted = drifted.spectral.rho + 1.0;
  CHECK(has_violation(verify_report(drifted), "interlacing"));
}

TEST_CASE("soundness sweep over all connected graphs with n <= 5") {
  const SolverConfig cfg;
  for (int n = 2; n <= 5; ++n) {
    ConnectedGraphEnumerator en(n);
    while (auto g = en.next()) {
      const BoundsReport report = analyze(*g, cfg);
      CHECK(verify_report(report, cfg).empty());
      const double rho = report.spectral.rho;
      for (const VertexBounds& row : report.rows) {
        CHECK(row.degree >= 1);  // connected with n >= 2
        CHECK(std::abs(row.exact_sq - row.actual * row.actual) <= 1e-8);
        // winner is decided by the sign of rho^2 - rho_i^2 - d
        const double proxy = rho * rho - row.rho_deleted * row.rho_deleted - row.degree;
        const double diff = row.lower_new - row.lower_lwm;
        if (diff > 1e-10) CHECK(proxy > -1e-10);
        if (diff < -1e-10) CHECK(proxy < 1e-10);
      }
      // strictness of the upper bound away from its equality case
      for (std::size_t i = 0; i < report.rows.size(); ++i)
        if (!report.cg_equality_flags[i])
          CHECK(report.rows[i].actual < report.rows[i].upper_cg - 1e-12);
    }
  }
}

TEST_CASE("tightness families") {
  for (int n = 2; n <= 10; ++n) {
    const BoundsReport report = analyze(named_graph(GraphFamily::Complete, n));
    const double flat = 1.0 / std::sqrt(static_cast<double>(n));
    for (const VertexBounds& row : report.rows) {
      CHECK(std::abs(row.lower_new - row.actual) < 1e-10);
      CHECK(std::abs(row.actual - flat) < 1e-10);
    }
    for (char flag : report.cg_equality_flags) CHECK(flag);
  }
  for (int m = 1; m <= 50; ++m) {
    const BoundsReport report = analyze(named_graph(GraphFamily::Star, m + 1));
    CHECK(report.pr_equality);
    CHECK(std::abs(report.x_max - kMaxEntryBound) < 1e-10);
    CHECK(report.cg_equality_flags[0]);
    // star leaves tie the two lower bounds: d = rho^2 - rho_i^2 = 1
    for (std::size_t v = 1; v < report.winner_per_vertex.size(); ++v)
      CHECK(report.winner_per_vertex[v] == LowerBoundWinner::Tie);
  }
}

TEST_CASE("no non-star graph on <= 6 vertices approaches the max-entry bound") {
  for (int n = 2; n <= 6; ++n) {
    ConnectedGraphEnumerator en(n);
    while (auto g = en.next()) {
      const BoundsReport report = analyze(*g);
      if (!report.pr_equality) CHECK(report.x_max < kMaxEntryBound - 1e-12);
    }
  }
}
