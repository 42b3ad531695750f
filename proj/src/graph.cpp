#include "k2ham/graph.hpp"

#include <algorithm>
#include <string>

#include "k2ham/error.hpp"

namespace k2ham {

namespace {

// Vertices reachable from `start` inside `allowed`.
VertexSet component_of(std::span<const VertexSet> adj, int start, const VertexSet& allowed) {
  VertexSet seen{start};
  VertexSet frontier{start};
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= adj[v]; });
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool connected_within(std::span<const VertexSet> adj, const VertexSet& allowed) {
  int s = allowed.first();
  if (s < 0) return true;
  return component_of(adj, s, allowed) == allowed;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is " +
                        std::to_string(kMaxVertices));
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
  }
}

void Graph::link(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) {
    throw PreconditionError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.link(e.u, e.v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.link(u, v);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::is_regular(int d) const {
  for (int v = 0; v < n_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

bool Graph::is_connected() const { return connected_within(adj_, vertices()); }

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.link(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) {
    throw PreconditionError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  Graph g = *this;
  g.adj_[u].erase(v);
  g.adj_[v].erase(u);
  --g.m_;
  return g;
}

std::vector<int> Deletion::lift(std::span<const int> seq) const {
  std::vector<int> out;
  out.reserve(seq.size());
  for (int v : seq) out.push_back(to_original[static_cast<std::size_t>(v)]);
  return out;
}

Deletion delete_vertices(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  VertexSet keep = g.vertices() - s;
  if (keep.empty()) throw PreconditionError("deleting every vertex leaves an empty graph");

  Deletion d;
  d.from_original.assign(static_cast<std::size_t>(n), -1);
  keep.for_each([&](int v) {
    d.from_original[static_cast<std::size_t>(v)] = static_cast<int>(d.to_original.size());
    d.to_original.push_back(v);
  });

  const int k = static_cast<int>(d.to_original.size());
  std::vector<Edge> edges;
  for (int nu = 0; nu < k; ++nu) {
    int u = d.to_original[static_cast<std::size_t>(nu)];
    VertexSet nb = g.neighbors(u) & keep;
    nb.for_each([&](int v) {
      if (v > u) edges.emplace_back(nu, d.from_original[static_cast<std::size_t>(v)]);
    });
  }
  d.graph = Graph::from_edges(k, edges);
  return d;
}

Deletion induced_subgraph(const Graph& g, const VertexSet& s) {
  return delete_vertices(g, g.vertices() - s);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = kMaxVertices + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      g.neighbors(u).for_each([&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      });
    }
  }
  if (best > kMaxVertices) return std::nullopt;
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw PreconditionError("is_k_connected supports k in 1..3");
  const int n = g.order();
  if (n <= k) return false;
  const VertexSet all = g.vertices();
  auto adj = g.adjacency();
  if (!connected_within(adj, all)) return false;
  for (int u = 0; u < n && k >= 2; ++u) {
    VertexSet rest = all;
    rest.erase(u);
    if (!connected_within(adj, rest)) return false;
    for (int v = u + 1; v < n && k >= 3; ++v) {
      VertexSet rest2 = rest;
      rest2.erase(v);
      if (!connected_within(adj, rest2)) return false;
    }
  }
  return true;
}

Bipartition bipartite_balance(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !g.is_connected()) {
    throw PreconditionError("bipartite balance needs a connected graph");
  }
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  side[0] = 0;
  bool ok = true;
  while (!stack.empty() && ok) {
    int u = stack.back();
    stack.pop_back();
    g.neighbors(u).for_each([&](int v) {
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        stack.push_back(v);
      } else if (side[v] == side[u]) {
        ok = false;
      }
    });
  }
  if (!ok) return {};
  int ones = static_cast<int>(std::count(side.begin(), side.end(), 1));
  return {true, 2 * ones == n};
}

}  // namespace k2ham
