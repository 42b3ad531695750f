#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "k2ham/vertex_set.hpp"

namespace k2ham {

/// Undirected edge, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(int w) const { return u == w || v == w; }
  int other(int w) const { return w == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= kMaxVertices).
///
/// Every value satisfies: symmetric adjacency, no loops, no bits at or above n.
/// "Mutation" produces a new value (with_edge / without_edge).
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws PreconditionError on loops, duplicate edges or labels outside [0, n).
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  std::span<const VertexSet> adjacency() const { return adj_; }
  int degree(int v) const { return adj_[v].size(); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;
  bool is_regular(int d) const;
  bool is_cubic() const { return is_regular(3); }
  bool is_connected() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  void link(int u, int v);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Result of deleting vertices: the induced subgraph on the survivors,
/// relabelled 0..k-1 in ascending order of their original labels.
struct Deletion {
  Graph graph;
  std::vector<int> to_original;    ///< new label -> original label
  std::vector<int> from_original;  ///< original label -> new label, -1 if deleted

  std::vector<int> lift(std::span<const int> seq) const;
};

/// G - S.  Throws PreconditionError when S covers every vertex.
Deletion delete_vertices(const Graph& g, const VertexSet& s);

/// G[S].
Deletion induced_subgraph(const Graph& g, const VertexSet& s);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// True iff n > k and no set of fewer than k vertices disconnects g.  k in 1..3.
bool is_k_connected(const Graph& g, int k);

struct Bipartition {
  bool bipartite = false;
  bool balanced = false;
};

/// Throws PreconditionError if g is disconnected.
Bipartition bipartite_balance(const Graph& g);

}  // namespace k2ham
