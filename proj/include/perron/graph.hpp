#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace perron {

using Vertex = int;

/// Simple undirected graph on n >= 1 vertices, stored as a dense symmetric
/// 0/1 adjacency matrix (no self-loops). Values are treated as immutable
/// once built; add_edge is construction-phase API. All free functions below
/// are pure, so graphs can be analyzed concurrently without locking.
class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Inserts the undirected edge {u, v}. Rejects self-loops and bad indices;
  /// inserting an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);

  /// Optional display names, one per vertex (empty when unset). Labels are
  /// presentation data and do not participate in equality.
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<std::string> labels);

  /// out = A * v for the dense adjacency matrix A. out is resized to n.
  void adjacency_matvec(const std::vector<double>& v, std::vector<double>& out) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  void check_vertex(Vertex v) const;

  int n_;
  std::vector<std::uint8_t> adj_;  // row-major n*n, symmetric, zero diagonal
  std::vector<std::string> labels_;
};

/// Disjoint vertex sets covering all vertices; every edge stays inside one set.
struct ComponentPartition {
  std::vector<std::vector<Vertex>> components;
};

/// Builds a graph from an unordered edge list. Duplicate pairs collapse.
Graph graph_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

/// True iff every vertex is reachable from vertex 0 (n = 1 is connected).
bool is_connected(const Graph& g);

/// Maximal connected vertex sets, ordered by smallest member, each sorted.
ComponentPartition connected_components(const Graph& g);

/// Removes vertex v and its incident edges. Remaining vertices keep their
/// relative order: vertex k > v becomes k - 1.
Graph delete_vertex(const Graph& g, Vertex v);

/// Subgraph induced on `keep` (strictly increasing vertex list); vertex
/// keep[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

/// The common degree d if all vertices have degree d (edgeless graphs are
/// 0-regular), nullopt otherwise.
std::optional<int> is_regular(const Graph& g);

/// True iff g is the star K_{1,n-1}: one center of degree n-1, all other
/// vertices of degree 1. K_2 = K_{1,1} counts; K_1 does not.
bool is_star(const Graph& g);

enum class GraphFamily { Complete, Star, Path, Cycle };

/// Standard constructions; star(n) = K_{1,n-1} with the center at vertex 0.
/// Cycles require n >= 3.
Graph named_graph(GraphFamily family, int n);

inline constexpr int kDefaultEnumerationCap = 7;
/// Pair masks must fit in 64 bits: n(n-1)/2 <= 55 for n <= 11.
inline constexpr int kMaxEnumerationSize = 11;

/// Bit k of a pair mask selects the vertex pair (i, j), i < j, in
/// column-major order (0,1),(0,2),(1,2),(0,3),...: the same bit order the
/// graph6 format uses.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

/// 2^(n(n-1)/2), the number of labeled simple graphs on n vertices.
std::uint64_t pair_mask_count(int n);

/// Streams every labeled connected graph on n vertices exactly once, in
/// increasing pair-mask order. The [begin, end) constructor restricts the
/// mask range so exhaustive sweeps can be chunked across workers.
class ConnectedGraphEnumerator {
 public:
  explicit ConnectedGraphEnumerator(int n, int cap = kDefaultEnumerationCap);
  ConnectedGraphEnumerator(int n, std::uint64_t begin, std::uint64_t end,
                           int cap = kDefaultEnumerationCap);

  std::optional<Graph> next();

 private:
  int n_;
  std::uint64_t mask_;
  std::uint64_t end_;
};

/// Samples Erdős–Rényi G(n, p) and resamples until connected (budget 10^5
/// attempts). Deterministic across platforms for a given (n, p, seed): the
/// generator is std::mt19937_64 seeded with `seed`, one draw per vertex pair
/// in pair-mask order, mapped to [0,1) as (word >> 11) * 2^-53, edge present
/// iff the draw is < p.
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace perron
