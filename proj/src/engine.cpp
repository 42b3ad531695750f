#include "k2ham/engine.hpp"

#include <algorithm>
#include <string>

#include "k2ham/error.hpp"

namespace k2ham {

namespace {

/// One hamiltonian-cycle enumeration over an adjacency with required edges.
class CycleSearch {
 public:
  CycleSearch(std::vector<VertexSet> adj, std::vector<VertexSet> req, int start, std::uint64_t limit)
      : n_(static_cast<int>(adj.size())),
        adj_(std::move(adj)),
        req_(std::move(req)),
        start_(start),
        limit_(limit) {}

  bool contradictory() const { return contradictory_; }
  std::uint64_t nodes() const { return nodes_; }

  SearchStatus run(const CycleVisitor& visit) {
    visit_ = &visit;
    if (!prepare()) return SearchStatus::absent;
    int v = start_;
    if (v < 0) {
      int best = kMaxVertices + 1;
      for (int x = 0; x < n_; ++x) {
        if (adj_[x].size() < best) {
          best = adj_[x].size();
          v = x;
        }
      }
    }
    center_ = v;
    const VertexSet& must = req_[v];
    path_.reserve(static_cast<std::size_t>(n_));
    for (int u = adj_[v].first(); u >= 0 && !stop_; u = adj_[v].next(u)) {
      for (int w = adj_[v].next(u); w >= 0 && !stop_; w = adj_[v].next(w)) {
        if (!must.subset_of(VertexSet{u, w})) continue;
        try_pair(u, w);
        if (aborted_) return SearchStatus::undecided;
      }
    }
    if (found_) return SearchStatus::found;
    return aborted_ ? SearchStatus::undecided : SearchStatus::absent;
  }

 private:
  // Normalises the required edges; false if no cycle can exist.
  bool prepare() {
    if (n_ < 3) return false;
    for (int v = 0; v < n_; ++v) {
      if (!req_[v].subset_of(adj_[v]) || req_[v].size() > 2) {
        contradictory_ = true;
        return false;
      }
    }
    // A vertex with two required edges cannot use any other edge.
    for (int v = 0; v < n_; ++v) {
      if (req_[v].size() != 2) continue;
      (adj_[v] - req_[v]).for_each([&](int u) { adj_[u].erase(v); });
      adj_[v] = req_[v];
    }
    for (int v = 0; v < n_; ++v) {
      if (!req_[v].subset_of(adj_[v])) {
        contradictory_ = true;
        return false;
      }
      if (adj_[v].size() < 2) return false;
    }
    avail_.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) avail_[v] = adj_[v].size();
    return true;
  }

  // `v` stops being a path end; false if some unused neighbour other than
  // `entering` is left with fewer than two usable neighbours.  `dead` collects
  // the starved unused neighbours.
  void make_interior(int v, VertexSet& dead) {
    adj_[v].for_each([&](int z) {
      if (--avail_[z] < 2 && !in_path_.contains(z)) dead.insert(z);
    });
  }
  void undo_interior(int v) {
    adj_[v].for_each([&](int z) { ++avail_[z]; });
  }

  void try_pair(int u, int w) {
    first_ = u;
    path_.assign({u, center_, w});
    in_path_ = VertexSet{u, center_, w};
    VertexSet dead;
    make_interior(center_, dead);
    if (dead.empty()) extend(w, center_);
    undo_interior(center_);
  }

  void extend(int end, int prev) {
    if (limit_ != 0 && ++nodes_ > limit_) {
      aborted_ = true;
      stop_ = true;
      return;
    }
    if (limit_ == 0) ++nodes_;

    if (static_cast<int>(path_.size()) == n_) {
      if (!adj_[end].contains(first_)) return;
      if (!(req_[end] - VertexSet{prev, first_}).empty()) return;
      if (!(req_[first_] - VertexSet{center_, end}).empty()) return;
      found_ = true;
      if ((*visit_)(path_)) stop_ = true;
      return;
    }
    // The first vertex still needs an unused neighbour to close the cycle.
    if (!adj_[first_].intersects(VertexSet::range(n_) - in_path_)) return;

    VertexSet cand = adj_[end] - in_path_;
    VertexSet pending = req_[end];
    pending.erase(prev);
    if (pending.size() > 1) return;
    if (pending.size() == 1) {
      int y = pending.first();
      if (in_path_.contains(y)) return;
      cand &= VertexSet{y};
    }

    VertexSet dead;
    make_interior(end, dead);
    if (dead.size() == 1) cand &= dead;
    if (dead.size() <= 1) {
      for (int x = cand.first(); x >= 0 && !stop_; x = cand.next(x)) {
        path_.push_back(x);
        in_path_.insert(x);
        extend(x, end);
        in_path_.erase(x);
        path_.pop_back();
      }
    }
    undo_interior(end);
  }

  int n_;
  std::vector<VertexSet> adj_;
  std::vector<VertexSet> req_;
  int start_;
  std::uint64_t limit_;

  const CycleVisitor* visit_ = nullptr;
  std::vector<int> avail_;
  std::vector<int> path_;
  VertexSet in_path_;
  int first_ = -1;
  int center_ = -1;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  bool stop_ = false;
  bool aborted_ = false;
  bool contradictory_ = false;
};

struct Prepared {
  std::vector<VertexSet> adj;
  std::vector<VertexSet> req;
  bool contradictory = false;
};

Prepared prepare(const Graph& g, const SearchConstraints& c) {
  Prepared p;
  const int n = g.order();
  p.adj.assign(g.adjacency().begin(), g.adjacency().end());
  p.req.assign(static_cast<std::size_t>(n), VertexSet{});
  auto in_range = [n](const Edge& e) { return e.u >= 0 && e.v < n && e.u != e.v; };
  for (const Edge& e : c.forbidden) {
    if (!in_range(e)) throw PreconditionError("forbidden edge out of range");
    p.adj[e.u].erase(e.v);
    p.adj[e.v].erase(e.u);
  }
  for (const Edge& e : c.required) {
    if (!in_range(e)) throw PreconditionError("required edge out of range");
    if (!p.adj[e.u].contains(e.v)) p.contradictory = true;
    p.req[e.u].insert(e.v);
    p.req[e.v].insert(e.u);
  }
  return p;
}

void add_link(Prepared& p, int u, int v) {
  p.adj[u].insert(v);
  p.adj[v].insert(u);
  p.req[u].insert(v);
  p.req[v].insert(u);
}

bool requires_edge(const SearchConstraints& c, Edge e) {
  return std::find(c.required.begin(), c.required.end(), e) != c.required.end();
}

// Vertices of `cycle` read from position of `from`, stepping away from `away`.
std::vector<int> walk_from(std::span<const int> cycle, int from, int away) {
  const int n = static_cast<int>(cycle.size());
  int i = static_cast<int>(std::find(cycle.begin(), cycle.end(), from) - cycle.begin());
  int step = cycle[(i + n - 1) % n] == away ? 1 : -1;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(cycle[((i + step * k) % n + n) % n]);
  return out;
}

}  // namespace

SearchStatus for_each_hamiltonian_cycle(const Graph& g, const SearchConstraints& c,
                                        const CycleVisitor& visit, const SearchOptions& opts) {
  Prepared p = prepare(g, c);
  if (p.contradictory) return SearchStatus::absent;
  CycleSearch search(std::move(p.adj), std::move(p.req), -1, opts.node_limit);
  return search.run(visit);
}

SearchResult<CycleWitness> find_hamiltonian_cycle(const Graph& g, const SearchConstraints& c,
                                                  const SearchOptions& opts) {
  SearchResult<CycleWitness> r;
  Prepared p = prepare(g, c);
  if (p.contradictory) {
    r.contradictory = true;
    return r;
  }
  CycleSearch search(std::move(p.adj), std::move(p.req), -1, opts.node_limit);
  r.status = search.run([&](std::span<const int> cyc) {
    r.witness = canonical_cycle(cyc);
    return true;
  });
  r.contradictory = search.contradictory();
  r.nodes = search.nodes();
  return r;
}

CountResult count_hamiltonian_cycles(const Graph& g, const SearchConstraints& c, const SearchOptions& opts) {
  CountResult r;
  Prepared p = prepare(g, c);
  if (p.contradictory) return r;
  CycleSearch search(std::move(p.adj), std::move(p.req), -1, opts.node_limit);
  SearchStatus st = search.run([&](std::span<const int>) {
    ++r.count;
    return false;
  });
  r.status = st == SearchStatus::undecided ? st : (r.count ? SearchStatus::found : SearchStatus::absent);
  r.nodes = search.nodes();
  return r;
}

SearchResult<PathWitness> find_hamiltonian_path(const Graph& g, int s, int t, const SearchConstraints& c,
                                                const SearchOptions& opts) {
  const int n = g.order();
  if (s < 0 || t < 0 || s >= n || t >= n) throw PreconditionError("path endpoint out of range");
  if (s == t) throw PreconditionError("hamiltonian path endpoints must differ");
  SearchResult<PathWitness> r;
  Prepared p = prepare(g, c);
  if (p.contradictory) {
    r.contradictory = true;
    return r;
  }
  if (n == 2) {
    if (p.adj[s].contains(t)) {
      r.status = SearchStatus::found;
      r.witness = PathWitness{s, t};
    }
    return r;
  }
  // The path can never contain st itself once n > 2.
  if (requires_edge(c, Edge(s, t))) return r;
  add_link(p, s, t);
  CycleSearch search(std::move(p.adj), std::move(p.req), s, opts.node_limit);
  r.status = search.run([&](std::span<const int> cyc) {
    r.witness = walk_from(cyc, s, t);
    return true;
  });
  r.contradictory = search.contradictory();
  r.nodes = search.nodes();
  return r;
}

SearchResult<PathPair> find_disjoint_spanning_paths(const Graph& g, std::pair<int, int> pair1,
                                                    std::pair<int, int> pair2, const SearchConstraints& c,
                                                    const SearchOptions& opts, const PathPairFilter& accept) {
  const int n = g.order();
  auto [s1, t1] = pair1;
  auto [s2, t2] = pair2;
  for (int v : {s1, t1, s2, t2})
    if (v < 0 || v >= n) throw PreconditionError("path endpoint out of range");
  if (VertexSet({s1, t1, s2, t2}).size() != 4) {
    throw PreconditionError("disjoint path endpoints must be pairwise distinct");
  }
  SearchResult<PathPair> r;
  Prepared p = prepare(g, c);
  if (p.contradictory) {
    r.contradictory = true;
    return r;
  }
  // Closing t1-s2 and t2-s1 turns the pair into a hamiltonian cycle; the
  // cycle is accepted only if it splits back with the right pairing.
  if (requires_edge(c, Edge(t1, s2)) || requires_edge(c, Edge(t2, s1))) return r;
  add_link(p, t1, s2);
  add_link(p, t2, s1);
  CycleSearch search(std::move(p.adj), std::move(p.req), -1, opts.node_limit);
  r.status = search.run([&](std::span<const int> cyc) {
    std::vector<int> seq = walk_from(cyc, s1, t2);
    auto it = std::find(seq.begin(), seq.end(), t1);
    if (it + 1 == seq.end() || *(it + 1) != s2) return false;
    PathPair pp{PathWitness(seq.begin(), it + 1), PathWitness(it + 1, seq.end())};
    if (accept && !accept(pp)) return false;
    r.witness = std::move(pp);
    return true;
  });
  if (r.status == SearchStatus::found && !r.witness) r.status = SearchStatus::absent;
  r.contradictory = search.contradictory();
  r.nodes = search.nodes();
  return r;
}

CycleWitness canonical_cycle(std::span<const int> cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n == 0) return {};
  int i = static_cast<int>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  int fwd = cycle[(i + 1) % n];
  int back = cycle[(i + n - 1) % n];
  int step = fwd < back ? 1 : -1;
  CycleWitness out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(cycle[((i + step * k) % n + n) % n]);
  return out;
}

namespace {

bool sequence_edges_ok(const Graph& g, std::span<const int> seq, bool closed, const SearchConstraints& c) {
  const int k = static_cast<int>(seq.size());
  std::vector<Edge> used;
  for (int i = 0; i + 1 < k; ++i) used.emplace_back(seq[i], seq[i + 1]);
  if (closed) used.emplace_back(seq[k - 1], seq[0]);
  for (const Edge& e : used)
    if (!g.has_edge(e.u, e.v)) return false;
  std::sort(used.begin(), used.end());
  for (const Edge& e : c.forbidden)
    if (std::binary_search(used.begin(), used.end(), e)) return false;
  for (const Edge& e : c.required)
    if (!std::binary_search(used.begin(), used.end(), e)) return false;
  return true;
}

bool covers_exactly(std::span<const int> seq, int n, const VertexSet& cover) {
  VertexSet seen;
  for (int v : seq) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.insert(v);
  }
  return seen == cover;
}

}  // namespace

bool is_hamiltonian_cycle(const Graph& g, std::span<const int> cycle, const SearchConstraints& c) {
  if (static_cast<int>(cycle.size()) != g.order() || cycle.size() < 3) return false;
  return covers_exactly(cycle, g.order(), g.vertices()) && sequence_edges_ok(g, cycle, true, c);
}

bool is_spanning_path(const Graph& g, std::span<const int> path, int s, int t, const VertexSet& cover,
                      const SearchConstraints& c) {
  if (path.size() < 2 || path.front() != s || path.back() != t) return false;
  return covers_exactly(path, g.order(), cover) && sequence_edges_ok(g, path, false, c);
}

bool is_hamiltonian_path(const Graph& g, std::span<const int> path, int s, int t, const SearchConstraints& c) {
  return is_spanning_path(g, path, s, t, g.vertices(), c);
}

bool is_disjoint_spanning_pair(const Graph& g, const PathPair& pp, std::pair<int, int> pair1,
                               std::pair<int, int> pair2, const SearchConstraints& c) {
  VertexSet a;
  VertexSet b;
  for (int v : pp.first)
    if (v >= 0 && v < g.order()) a.insert(v);
  for (int v : pp.second)
    if (v >= 0 && v < g.order()) b.insert(v);
  if (a.intersects(b) || (a | b) != g.vertices()) return false;
  SearchConstraints forbid_only{{}, c.forbidden};
  if (!is_spanning_path(g, pp.first, pair1.first, pair1.second, a, forbid_only)) return false;
  if (!is_spanning_path(g, pp.second, pair2.first, pair2.second, b, forbid_only)) return false;
  // Required edges may be spread over both paths.
  std::vector<Edge> used;
  for (const auto* p : {&pp.first, &pp.second})
    for (std::size_t i = 0; i + 1 < p->size(); ++i) used.emplace_back((*p)[i], (*p)[i + 1]);
  std::sort(used.begin(), used.end());
  for (const Edge& e : c.required)
    if (!std::binary_search(used.begin(), used.end(), e)) return false;
  return true;
}

}  // namespace k2ham
