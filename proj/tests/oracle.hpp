#pragma once

// Permutation brute force, independent of the backtracking engine.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "k2ham/engine.hpp"
#include "k2ham/formats.hpp"
#include "k2ham/graph.hpp"

namespace oracle {

using k2ham::Edge;
using k2ham::Graph;

inline bool edge_ok(const Graph& g, int u, int v, const std::vector<Edge>& forbidden) {
  if (!g.has_edge(u, v)) return false;
  return std::find(forbidden.begin(), forbidden.end(), Edge(u, v)) == forbidden.end();
}

inline bool uses_all(const std::vector<int>& seq, bool closed, const std::vector<Edge>& required) {
  for (const Edge& e : required) {
    bool hit = false;
    for (std::size_t i = 0; i + 1 < seq.size() && !hit; ++i) hit = Edge(seq[i], seq[i + 1]) == e;
    if (closed && seq.size() > 2 && Edge(seq.back(), seq.front()) == e) hit = true;
    if (!hit) return false;
  }
  return true;
}

/// Undirected hamiltonian cycles of g on the vertex list `vs`.
inline long count_cycles(const Graph& g, std::vector<int> vs, const k2ham::SearchConstraints& c = {}) {
  if (vs.size() < 3) return 0;
  std::sort(vs.begin(), vs.end());
  int first = vs[0];
  std::vector<int> rest(vs.begin() + 1, vs.end());
  long count = 0;
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<int> seq{first};
    seq.insert(seq.end(), rest.begin(), rest.end());
    bool ok = true;
    for (std::size_t i = 0; i < seq.size() && ok; ++i) ok = edge_ok(g, seq[i], seq[(i + 1) % seq.size()], c.forbidden);
    if (ok && uses_all(seq, true, c.required)) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

inline long count_cycles(const Graph& g, const k2ham::SearchConstraints& c = {}) {
  std::vector<int> vs(g.order());
  std::iota(vs.begin(), vs.end(), 0);
  return count_cycles(g, vs, c);
}

/// Paths from s to t through exactly the vertices of `vs` (which contains s, t).
inline bool has_path(const Graph& g, const std::vector<int>& vs, int s, int t,
                     const k2ham::SearchConstraints& c = {}) {
  if (s == t) return vs.size() == 1;
  std::vector<int> mid;
  for (int v : vs) {
    if (v != s && v != t) mid.push_back(v);
  }
  std::sort(mid.begin(), mid.end());
  do {
    std::vector<int> seq{s};
    seq.insert(seq.end(), mid.begin(), mid.end());
    seq.push_back(t);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i) ok = edge_ok(g, seq[i], seq[i + 1], c.forbidden);
    if (ok && uses_all(seq, false, c.required)) return true;
  } while (std::next_permutation(mid.begin(), mid.end()));
  return false;
}

inline std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> vs(g.order());
  std::iota(vs.begin(), vs.end(), 0);
  return vs;
}

/// Two disjoint paths s1-t1, s2-t2 covering V(g), no constraints.
inline bool has_pair(const Graph& g, int s1, int t1, int s2, int t2) {
  std::vector<int> others;
  for (int v = 0; v < g.order(); ++v) {
    if (v != s1 && v != t1 && v != s2 && v != t2) others.push_back(v);
  }
  const int k = static_cast<int>(others.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> a{s1, t1}, b{s2, t2};
    for (int i = 0; i < k; ++i) ((mask >> i) & 1 ? a : b).push_back(others[i]);
    if (has_path(g, a, s1, t1) && has_path(g, b, s2, t2)) return true;
  }
  return false;
}

inline std::vector<Graph> read_corpus(const std::string& name) {
  std::ifstream f(std::string(TEST_DATA_DIR) + "/" + name);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty()) out.push_back(k2ham::decode_graph6(line));
  }
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
