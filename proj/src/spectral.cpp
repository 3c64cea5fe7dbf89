#include "perron/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "perron/errors.hpp"

namespace perron {

namespace {

void check_config(const SolverConfig& cfg) {
  if (!(cfg.residual_tol > 0.0)) throw InputError("residual_tol must be > 0");
  if (cfg.max_iterations < 1) throw InputError("max_iterations must be >= 1");
  if (cfg.verify_slack < 0.0) throw InputError("verify_slack must be >= 0");
}

double infinity_norm_residual(const std::vector<double>& av, double rho,
                              const std::vector<double>& v) {
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::abs(av[i] - rho * v[i]));
  return r;
}

}  // namespace

SpectralResult principal_eigenpair(const Graph& g, const SolverConfig& cfg) {
  check_config(cfg);
  if (!is_connected(g))
    throw DomainError("principal_eigenpair needs a connected graph; use spectral_radius_any");

  const int n = g.vertex_count();
  SpectralResult result;
  if (n == 1) {
    result.eigenvector = {1.0};
    return result;
  }

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> av(n);
  double rho = 0.0;
  double res = 0.0;
  for (long iter = 1; iter <= cfg.max_iterations; ++iter) {
    g.adjacency_matvec(v, av);
    rho = std::inner_product(v.begin(), v.end(), av.begin(), 0.0);  // Rayleigh, ||v|| = 1
    res = infinity_norm_residual(av, rho, v);
    if (res <= cfg.residual_tol) {
      result.rho = rho;
      result.eigenvector = v;  // positive: (A+I)-iterates of a positive start stay positive
      result.iterations = iter;
      result.residual = res;
      return result;
    }
    // Next iterate: (A + I) v, renormalized.
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      v[i] += av[i];
      norm_sq += v[i] * v[i];
    }
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < n; ++i) v[i] *= inv_norm;
  }

  if (cfg.oracle_fallback) {
    const EigenDecomposition eig = dense_eigen_oracle(g);
    std::vector<double> x(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = eig.vector_entry(i, 0);
      sum += x[i];
    }
    if (sum < 0.0)
      for (double& xi : x) xi = -xi;
    g.adjacency_matvec(x, av);
    result.rho = eig.eigenvalues[0];
    result.residual = infinity_norm_residual(av, result.rho, x);
    result.eigenvector = std::move(x);
    result.iterations = cfg.max_iterations;
    result.method = EigenMethod::OracleFallback;
    return result;
  }
  throw ConvergenceError("power iteration did not reach residual " +
                             std::to_string(cfg.residual_tol) + " in " +
                             std::to_string(cfg.max_iterations) + " iterations",
                         cfg.max_iterations, res);
}

double spectral_radius_any(const Graph& g, const SolverConfig& cfg) {
  double radius = 0.0;  // singleton and edgeless components contribute 0
  for (const auto& comp : connected_components(g).components) {
    if (comp.size() < 2) continue;
    const Graph sub = induced_subgraph(g, comp);
    radius = std::max(radius, principal_eigenpair(sub, cfg).rho);
  }
  return radius;
}

EigenDecomposition dense_eigen_oracle(const Graph& g) {
  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 50;

  const int n = g.vertex_count();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> vec(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    vec[static_cast<std::size_t>(i) * n + i] = 1.0;
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) a[static_cast<std::size_t>(i) * n + j] = 1.0;
  }
  auto at = [&a, n](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };
  auto vt = [&vec, n](int r, int c) -> double& { return vec[static_cast<std::size_t>(r) * n + c]; };

  auto max_offdiagonal = [&]() {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    return off;
  };

  int sweeps = 0;
  double off = max_offdiagonal();
  while (off > kOffTol) {
    if (sweeps == kMaxSweeps)
      throw ConvergenceError("Jacobi sweeps exhausted with off-diagonal " + std::to_string(off),
                             sweeps, off);
    ++sweeps;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= kOffTol) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = at(r, p);
            const double arq = at(r, q);
            at(r, p) = arp - s * (arq + tau * arp);
            at(p, r) = at(r, p);
            at(r, q) = arq + s * (arp - tau * arq);
            at(q, r) = at(r, q);
          }
          const double vrp = vt(r, p);
          const double vrq = vt(r, q);
          vt(r, p) = vrp - s * (vrq + tau * vrp);
          vt(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    off = max_offdiagonal();
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int lhs, int rhs) { return at(lhs, lhs) > at(rhs, rhs); });

  EigenDecomposition out;
  out.n = n;
  out.sweeps = sweeps;
  out.max_offdiagonal = off;
  out.eigenvalues.resize(n);
  out.eigenvectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = at(order[k], order[k]);
    for (int r = 0; r < n; ++r)
      out.eigenvectors[static_cast<std::size_t>(k) * n + r] = vt(r, order[k]);
  }
  return out;
}

namespace {

// out = (shift*I - B) y, applied directly off the graph.
void shifted_apply(double shift, const Graph& bg, const std::vector<double>& y,
                   std::vector<double>& out) {
  bg.adjacency_matvec(y, out);
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = shift * y[i] - out[i];
}

// In-place lower Cholesky factor of the dense SPD matrix m (row-major).
void cholesky_factor(std::vector<double>& m, int n) {
  for (int j = 0; j < n; ++j) {
    double d = m[static_cast<std::size_t>(j) * n + j];
    for (int k = 0; k < j; ++k) {
      const double ljk = m[static_cast<std::size_t>(j) * n + k];
      d -= ljk * ljk;
    }
    if (d <= 0.0)
      throw ConditioningError("Cholesky pivot " + std::to_string(d) + " at column " +
                              std::to_string(j) + ": matrix not positive definite");
    const double ljj = std::sqrt(d);
    m[static_cast<std::size_t>(j) * n + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = m[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < j; ++k)
        s -= m[static_cast<std::size_t>(i) * n + k] * m[static_cast<std::size_t>(j) * n + k];
      m[static_cast<std::size_t>(i) * n + j] = s / ljj;
    }
  }
}

void cholesky_solve(const std::vector<double>& l, int n, std::vector<double>& x) {
  for (int i = 0; i < n; ++i) {  // forward: L z = x
    double s = x[i];
    for (int k = 0; k < i; ++k) s -= l[static_cast<std::size_t>(i) * n + k] * x[k];
    x[i] = s / l[static_cast<std::size_t>(i) * n + i];
  }
  for (int i = n - 1; i >= 0; --i) {  // backward: L^T y = z
    double s = x[i];
    for (int k = i + 1; k < n; ++k) s -= l[static_cast<std::size_t>(k) * n + i] * x[k];
    x[i] = s / l[static_cast<std::size_t>(i) * n + i];
  }
}

}  // namespace

std::vector<double> spd_solve(double shift, const Graph& b_graph, const std::vector<double>& rhs,
                              const SolverConfig& cfg) {
  constexpr double kResidualTol = 1e-10;
  constexpr double kShiftMargin = 1e-12;

  const int n = b_graph.vertex_count();
  if (static_cast<int>(rhs.size()) != n)
    throw InputError("rhs length " + std::to_string(rhs.size()) + " does not match n=" +
                     std::to_string(n));
  const double lambda_max = spectral_radius_any(b_graph, cfg);
  if (shift <= lambda_max + kShiftMargin)
    throw ConditioningError("shift " + std::to_string(shift) +
                            " does not clear lambda_max(B) = " + std::to_string(lambda_max) +
                            "; the shifted system is not safely positive definite");

  std::vector<double> factor(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      factor[static_cast<std::size_t>(i) * n + j] =
          (i == j ? shift : 0.0) - (b_graph.has_edge(i, j) ? 1.0 : 0.0);
  cholesky_factor(factor, n);

  std::vector<double> y = rhs;
  cholesky_solve(factor, n, y);

  // Iterative refinement until the exact-identity contract holds.
  std::vector<double> work(n);
  for (int round = 0; round < 4; ++round) {
    shifted_apply(shift, b_graph, y, work);
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      work[i] = rhs[i] - work[i];
      res = std::max(res, std::abs(work[i]));
    }
    if (res <= kResidualTol) return y;
    cholesky_solve(factor, n, work);
    for (int i = 0; i < n; ++i) y[i] += work[i];
  }
  shifted_apply(shift, b_graph, y, work);
  double res = 0.0;
  for (int i = 0; i < n; ++i) res = std::max(res, std::abs(rhs[i] - work[i]));
  if (res > kResidualTol)
    throw ConditioningError("shifted solve stalled at residual " + std::to_string(res));
  return y;
}

}  // namespace perron
