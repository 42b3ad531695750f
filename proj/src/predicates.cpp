#include "k2ham/predicates.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <span>
#include <string>

#include "k2ham/error.hpp"
#include "k2ham/parallel.hpp"
#include "k2ham/query.hpp"

namespace k2ham {

namespace {

void require_order(const Graph& g, int min_n, const char* what) {
  if (g.order() < min_n) {
    throw PreconditionError(std::string(what) + " needs at least " + std::to_string(min_n) + " vertices");
  }
}

// Every deletion must leave a hamiltonian graph.
PredicateReport all_deletions_hamiltonian(const Graph& g, const std::vector<VertexSet>& deletions,
                                          const PredicateOptions& opts) {
  const std::size_t count = deletions.size();
  std::vector<SearchResult<CycleWitness>> results(count);
  std::atomic<std::size_t> first_fail{count};
  parallel_for(count, opts.jobs, [&](std::size_t i) {
    if (i > first_fail.load()) return;
    results[i] = cycle_after_deleting(g, deletions[i].to_vector(), {}, opts.search);
    if (results[i].status == SearchStatus::absent) {
      std::size_t cur = first_fail.load();
      while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
      }
    }
  });

  PredicateReport rep;
  const std::size_t fail = first_fail.load();
  if (fail < count) {
    rep.counterexample = deletions[fail].to_vector();
    return rep;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (results[i].undecided()) {
      rep.undecided = true;
      rep.witnesses.clear();
      return rep;
    }
    rep.witnesses.push_back({deletions[i].to_vector(), std::move(*results[i].witness)});
  }
  rep.verdict = true;
  return rep;
}

std::vector<VertexSet> single_deletions(const Graph& g) {
  std::vector<VertexSet> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(VertexSet{v});
  return out;
}

std::vector<VertexSet> edge_deletions(const Graph& g) {
  std::vector<VertexSet> out;
  for (const Edge& e : g.edges()) out.push_back(VertexSet{e.u, e.v});
  return out;
}

// Non-hamiltonicity of g combined with a K-predicate evaluated lazily.
template <class K>
PredicateReport non_hamiltonian_and(const Graph& g, const PredicateOptions& opts, K k_predicate) {
  auto ham = find_hamiltonian_cycle(g, {}, opts.search);
  if (ham.found()) {
    PredicateReport rep;
    rep.counterexample = std::vector<int>{};
    rep.counter_witness = std::move(ham.witness);
    return rep;
  }
  PredicateReport k = k_predicate();
  if (ham.undecided() && k.verdict) {
    k.verdict = false;
    k.undecided = true;
    k.witnesses.clear();
  }
  return k;
}

}  // namespace

PredicateReport hamiltonian_report(const Graph& g, const PredicateOptions& opts) {
  PredicateReport rep;
  auto r = find_hamiltonian_cycle(g, {}, opts.search);
  if (r.found()) {
    rep.verdict = true;
    rep.witnesses.push_back({{}, std::move(*r.witness)});
  } else if (r.undecided()) {
    rep.undecided = true;
  } else {
    rep.counterexample = std::vector<int>{};
  }
  return rep;
}

PredicateReport is_k1_hamiltonian(const Graph& g, const PredicateOptions& opts) {
  require_order(g, 4, "K1-hamiltonicity");
  return all_deletions_hamiltonian(g, single_deletions(g), opts);
}

PredicateReport is_k2_hamiltonian(const Graph& g, const PredicateOptions& opts) {
  require_order(g, 5, "K2-hamiltonicity");
  return all_deletions_hamiltonian(g, edge_deletions(g), opts);
}

PredicateReport is_hypohamiltonian(const Graph& g, const PredicateOptions& opts) {
  require_order(g, 5, "hypohamiltonicity");
  return non_hamiltonian_and(g, opts, [&] { return is_k1_hamiltonian(g, opts); });
}

PredicateReport is_k2_hypohamiltonian(const Graph& g, const PredicateOptions& opts) {
  require_order(g, 5, "K2-hypohamiltonicity");
  return non_hamiltonian_and(g, opts, [&] { return is_k2_hamiltonian(g, opts); });
}

ExceptionalVertices exceptional_vertices(const Graph& g, const PredicateOptions& opts) {
  ExceptionalVertices out;
  const int n = g.order();
  if (n < 4) throw PreconditionError("exceptional vertices need at least 4 vertices");
  auto ham = find_hamiltonian_cycle(g, {}, opts.search);
  out.warning = ham.found() || !is_k_connected(g, 2);
  std::vector<SearchStatus> status(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), opts.jobs, [&](std::size_t v) {
    status[v] = cycle_after_deleting(g, {static_cast<int>(v)}, {}, opts.search).status;
  });
  for (int v = 0; v < n; ++v) {
    if (status[v] == SearchStatus::absent) out.vertices.insert(v);
    if (status[v] == SearchStatus::undecided) out.undecided = true;
  }
  return out;
}

namespace {

/// Backtracking Tait colouring with forced-edge propagation.
class EdgeColoring {
 public:
  explicit EdgeColoring(const Graph& g) : g_(g), edges_(g.edges()) {
    const int n = g.order();
    incident_.assign(static_cast<std::size_t>(n), {});
    fill_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      for (int end : {edges_[i].u, edges_[i].v}) incident_[end][fill_[end]++] = i;
    }
    color_.assign(edges_.size(), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    order_ = bfs_edge_order();
  }

  std::optional<std::vector<int>> solve() {
    if (edges_.empty()) return color_;
    // Colours at one vertex may be fixed up to permutation.
    int v0 = edges_[order_[0]].u;
    for (int k = 0; k < 3; ++k) {
      if (!assign(incident_[v0][k], k)) return std::nullopt;
    }
    if (!propagate() || !search(0)) return std::nullopt;
    return color_;
  }

 private:
  std::vector<int> bfs_edge_order() const {
    std::vector<int> order;
    std::vector<bool> seen_edge(edges_.size(), false);
    std::vector<bool> seen(static_cast<std::size_t>(g_.order()), false);
    for (int root = 0; root < g_.order(); ++root) {
      if (seen[root]) continue;
      std::vector<int> queue{root};
      seen[root] = true;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        for (int k = 0; k < 3; ++k) {
          int e = incident_[v][k];
          if (!seen_edge[e]) {
            seen_edge[e] = true;
            order.push_back(e);
          }
          int w = edges_[e].other(v);
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    return order;
  }

  bool assign(int e, int c) {
    int bit = 1 << c;
    const Edge& ed = edges_[e];
    if ((used_[ed.u] | used_[ed.v]) & bit) return false;
    color_[e] = c;
    used_[ed.u] |= bit;
    used_[ed.v] |= bit;
    trail_.push_back(e);
    pending_.push_back(ed.u);
    pending_.push_back(ed.v);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int e = trail_.back();
      trail_.pop_back();
      int bit = 1 << color_[e];
      used_[edges_[e].u] &= ~bit;
      used_[edges_[e].v] &= ~bit;
      color_[e] = -1;
    }
  }

  // A vertex with two coloured edges forces the third.
  bool propagate() {
    while (!pending_.empty()) {
      int v = pending_.back();
      pending_.pop_back();
      int uncolored = -1;
      int count = 0;
      for (int k = 0; k < 3; ++k) {
        if (color_[incident_[v][k]] < 0) {
          uncolored = incident_[v][k];
          ++count;
        }
      }
      if (count != 1) continue;
      int c = std::countr_zero(static_cast<unsigned>(~used_[v] & 7));
      if (!assign(uncolored, c)) {
        pending_.clear();
        return false;
      }
    }
    return true;
  }

  bool search(std::size_t idx) {
    while (idx < order_.size() && color_[order_[idx]] >= 0) ++idx;
    if (idx == order_.size()) return true;
    int e = order_[idx];
    for (int c = 0; c < 3; ++c) {
      std::size_t mark = trail_.size();
      if (assign(e, c) && propagate() && search(idx + 1)) return true;
      pending_.clear();
      undo_to(mark);
    }
    return false;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> incident_;
  std::vector<int> fill_;
  std::vector<int> color_;
  std::vector<int> used_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<int> pending_;
};

// Number of components of g - removed that contain a cycle, capped at 2.
int cyclic_components(const Graph& g, std::span<const Edge> removed) {
  const int n = g.order();
  std::vector<VertexSet> adj(g.adjacency().begin(), g.adjacency().end());
  for (const Edge& e : removed) {
    adj[e.u].erase(e.v);
    adj[e.v].erase(e.u);
  }
  VertexSet unseen = VertexSet::range(n);
  int cyclic = 0;
  while (!unseen.empty() && cyclic < 2) {
    int s = unseen.first();
    VertexSet comp{s};
    VertexSet frontier{s};
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= adj[v]; });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    int degree_sum = 0;
    comp.for_each([&](int v) { degree_sum += adj[v].size(); });
    if (degree_sum / 2 >= comp.size()) ++cyclic;
  }
  return cyclic;
}

}  // namespace

std::optional<std::vector<int>> three_edge_coloring(const Graph& g) {
  if (!g.is_cubic()) throw PreconditionError("edge colouring class needs a cubic graph");
  return EdgeColoring(g).solve();
}

int cubic_chromatic_class(const Graph& g) { return three_edge_coloring(g) ? 1 : 2; }

bool is_cyclically_4_edge_connected(const Graph& g) {
  if (!g.is_connected()) throw PreconditionError("cyclic edge connectivity needs a connected graph");
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<Edge> cut;
  for (std::size_t i = 0; i < m; ++i) {
    cut.assign({edges[i]});
    if (cyclic_components(g, cut) >= 2) return false;
    for (std::size_t j = i + 1; j < m; ++j) {
      cut.assign({edges[i], edges[j]});
      if (cyclic_components(g, cut) >= 2) return false;
      for (std::size_t k = j + 1; k < m; ++k) {
        cut.assign({edges[i], edges[j], edges[k]});
        if (cyclic_components(g, cut) >= 2) return false;
      }
    }
  }
  return true;
}

SnarkReport is_snark(const Graph& g) {
  SnarkReport rep;
  rep.cubic = g.order() > 0 && g.is_cubic();
  rep.girth = girth(g);
  if (!rep.cubic) return rep;
  rep.cyclically_4_edge_connected = g.is_connected() && is_cyclically_4_edge_connected(g);
  rep.chromatic_class = cubic_chromatic_class(g);
  rep.verdict = rep.cyclically_4_edge_connected && rep.chromatic_class == 2 && rep.girth && *rep.girth >= 5;
  return rep;
}

}  // namespace k2ham
