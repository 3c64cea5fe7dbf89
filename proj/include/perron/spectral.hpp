#pragma once

#include <vector>

#include "perron/graph.hpp"

namespace perron {

struct SolverConfig {
  double residual_tol = 1e-12;    // target for the infinity-norm residual ||Ax - rho x||
  long max_iterations = 1000000;  // power-iteration cap
  double verify_slack = 1e-9;     // allowed inequality violation during verification
  bool oracle_fallback = true;    // fall back to the dense oracle on non-convergence
};

enum class EigenMethod { PowerIteration, OracleFallback };

/// Dominant eigenpair of a connected graph's adjacency matrix: rho is the
/// spectral radius, eigenvector the positive unit vector for it.
struct SpectralResult {
  double rho = 0.0;
  std::vector<double> eigenvector;
  long iterations = 0;
  double residual = 0.0;
  EigenMethod method = EigenMethod::PowerIteration;
};

/// Power iteration on A + I (primitive for connected graphs, so bipartite
/// spectra cannot stall it), started from the normalized all-ones vector.
/// Reported rho subtracts the shift back out; the eigenvector is positive
/// and unit-norm. n = 1 yields rho = 0, x = (1).
SpectralResult principal_eigenpair(const Graph& g, const SolverConfig& cfg = {});

/// Spectral radius of an arbitrary (possibly disconnected, possibly
/// edgeless) graph: the max over connected components, computed per
/// component so reducible inputs never feed the iterative solver.
double spectral_radius_any(const Graph& g, const SolverConfig& cfg = {});

/// Full spectrum of the dense symmetric adjacency matrix by cyclic Jacobi
/// rotations, swept until every off-diagonal entry is <= 1e-13 (at most 50
/// sweeps). Serves as the independent brute-force oracle.
struct EigenDecomposition {
  int n = 0;
  std::vector<double> eigenvalues;   // descending
  std::vector<double> eigenvectors;  // column-major n*n; column k pairs with eigenvalues[k]
  int sweeps = 0;
  double max_offdiagonal = 0.0;

  double vector_entry(int row, int k) const { return eigenvectors[static_cast<std::size_t>(k) * n + row]; }
};

EigenDecomposition dense_eigen_oracle(const Graph& g);

/// Solves (shift*I - B) y = rhs by dense Cholesky factorization, where B is
/// the adjacency matrix of b_graph. Requires shift > lambda_max(B) + 1e-12,
/// which makes the system symmetric positive definite; the solution is
/// refined until ||(shift*I - B) y - rhs||_inf <= 1e-10.
std::vector<double> spd_solve(double shift, const Graph& b_graph, const std::vector<double>& rhs,
                              const SolverConfig& cfg = {});

}  // namespace perron
