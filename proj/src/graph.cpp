#include "perron/graph.hpp"

#include <algorithm>
#include <random>

#include "perron/errors.hpp"

namespace perron {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw InputError("graph needs at least one vertex, got n=" + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
}

int Graph::edge_count() const {
  long twice = 0;
  for (std::uint8_t cell : adj_) twice += cell;
  return static_cast<int>(twice / 2);
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  const std::uint8_t* row = &adj_[static_cast<std::size_t>(v) * n_];
  int d = 0;
  for (int u = 0; u < n_; ++u) d += row[u];
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  const std::uint8_t* row = &adj_[static_cast<std::size_t>(v) * n_];
  std::vector<Vertex> out;
  for (int u = 0; u < n_; ++u)
    if (row[u]) out.push_back(u);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw InputError("expected " + std::to_string(n_) + " labels, got " +
                     std::to_string(labels.size()));
  labels_ = std::move(labels);
}

void Graph::adjacency_matvec(const std::vector<double>& v, std::vector<double>& out) const {
  out.resize(n_);
  for (int i = 0; i < n_; ++i) {
    const std::uint8_t* row = &adj_[static_cast<std::size_t>(i) * n_];
    double s = 0.0;
    for (int j = 0; j < n_; ++j)
      if (row[j]) s += v[j];
    out[i] = s;
  }
}

Graph graph_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

namespace {

// Breadth-first scan from `start` over unvisited vertices; marks `seen`.
std::vector<Vertex> bfs_component(const Graph& g, Vertex start, std::vector<char>& seen) {
  const int n = g.vertex_count();
  std::vector<Vertex> comp;
  std::vector<Vertex> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    comp.push_back(v);
    for (int u = 0; u < n; ++u)
      if (!seen[u] && g.has_edge(v, u)) {
        seen[u] = 1;
        queue.push_back(u);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  return static_cast<int>(bfs_component(g, 0, seen).size()) == g.vertex_count();
}

ComponentPartition connected_components(const Graph& g) {
  ComponentPartition parts;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) parts.components.push_back(bfs_component(g, v, seen));
  return parts;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  const int n = g.vertex_count();
  if (n == 1)
    throw DomainError("cannot delete the only vertex: the empty graph is not representable");
  if (v < 0 || v >= n)
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  Graph out(n - 1);
  for (int a = 0; a < n; ++a) {
    if (a == v) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == v || !g.has_edge(a, b)) continue;
      out.add_edge(a < v ? a : a - 1, b < v ? b : b - 1);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  if (keep.empty()) throw InputError("induced subgraph needs at least one vertex");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.vertex_count())
      throw InputError("induced subgraph vertex " + std::to_string(keep[i]) + " out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw InputError("induced subgraph vertex list must be strictly increasing");
  }
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::optional<int> is_regular(const Graph& g) {
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_star(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return false;
  if (g.edge_count() != n - 1) return false;
  int centers = 0;
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == n - 1)
      ++centers;
    else if (d == 1)
      ++leaves;
    else
      return false;
  }
  // K_2 has two degree-(n-1) vertices; any larger star exactly one center.
  return n == 2 ? centers == 2 : (centers == 1 && leaves == n - 1);
}

Graph named_graph(GraphFamily family, int n) {
  if (n < 1) throw InputError("graph family size must be >= 1, got " + std::to_string(n));
  Graph g(n);
  switch (family) {
    case GraphFamily::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      break;
    case GraphFamily::Star:
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      break;
    case GraphFamily::Path:
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      break;
    case GraphFamily::Cycle:
      if (n < 3) throw InputError("cycle needs n >= 3, got " + std::to_string(n));
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      g.add_edge(n - 1, 0);
      break;
  }
  return g;
}

std::uint64_t pair_mask_count(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw InputError("pair masks support 1 <= n <= " + std::to_string(kMaxEnumerationSize));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw InputError("pair masks support 1 <= n <= " + std::to_string(kMaxEnumerationSize));
  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (mask >> k & 1) g.add_edge(i, j);
  return g;
}

namespace {

// Allocation-free connectivity test straight off the pair mask.
bool mask_connected(int n, std::uint64_t mask) {
  std::uint32_t nbr[kMaxEnumerationSize] = {};
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (mask >> k & 1) {
        nbr[i] |= 1u << j;
        nbr[j] |= 1u << i;
      }
  const std::uint32_t all = (1u << n) - 1;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    std::uint32_t f = frontier;
    while (f) {
      const int v = __builtin_ctz(f);
      f &= f - 1;
      next |= nbr[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

void check_enumeration_size(int n, int cap) {
  if (n < 1) throw InputError("enumeration needs n >= 1");
  if (n > cap || n > kMaxEnumerationSize)
    throw InputError("enumeration of n=" + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(std::min(cap, kMaxEnumerationSize)) +
                     "; raise the cap or stream a graph6 catalog instead");
}

}  // namespace

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, int cap)
    : ConnectedGraphEnumerator(n, 0, 0, cap) {
  end_ = pair_mask_count(n);
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, std::uint64_t begin,
                                                   std::uint64_t end, int cap)
    : n_(n), mask_(begin), end_(end) {
  check_enumeration_size(n, cap);
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  while (mask_ < end_) {
    const std::uint64_t m = mask_++;
    if (mask_connected(n_, m)) return graph_from_pair_mask(n_, m);
  }
  return std::nullopt;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs n >= 1");
  if (p < 0.0 || p > 1.0) throw InputError("edge probability must be in [0, 1]");
  std::mt19937_64 engine(seed);
  // (word >> 11) * 2^-53 gives a platform-stable uniform draw in [0, 1).
  auto draw = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (draw() < p) g.add_edge(i, j);
    if (is_connected(g)) return g;
  }
  throw SamplingError("no connected sample within " + std::to_string(kMaxAttempts) +
                      " attempts (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

}  // namespace perron
