#include "k2ham/query.hpp"

namespace k2ham {

namespace {

VertexSet to_set(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

// Constraints restricted to the survivors of d, or nullopt when a required
// edge lost an endpoint.
std::optional<SearchConstraints> restrict(const Deletion& d, const SearchConstraints& c) {
  SearchConstraints out;
  for (const Edge& e : c.required) {
    int u = d.from_original[e.u];
    int v = d.from_original[e.v];
    if (u < 0 || v < 0) return std::nullopt;
    out.required.emplace_back(u, v);
  }
  for (const Edge& e : c.forbidden) {
    int u = d.from_original[e.u];
    int v = d.from_original[e.v];
    if (u >= 0 && v >= 0) out.forbidden.emplace_back(u, v);
  }
  return out;
}

}  // namespace

PairAnswer evaluate(const Graph& g, const PairQuery& q, const SearchOptions& opts, const PathPairFilter& accept) {
  PairAnswer ans;
  VertexSet del = to_set(q.deleted);
  std::vector<int> ends{q.first.first, q.first.second};
  if (q.second) {
    ends.push_back(q.second->first);
    ends.push_back(q.second->second);
  }
  for (int e : ends) {
    if (del.contains(e)) return ans;
  }
  Deletion d = delete_vertices(g, del);
  auto c = restrict(d, q.constraints);
  if (!c) return ans;
  auto map = [&](EndpointPair p) { return EndpointPair{d.from_original[p.first], d.from_original[p.second]}; };
  if (!q.second) {
    auto [s, t] = map(q.first);
    auto r = find_hamiltonian_path(d.graph, s, t, *c, opts);
    ans.status = r.status;
    if (r.witness) ans.paths.push_back(d.lift(*r.witness));
    return ans;
  }
  PathPairFilter lifted;
  if (accept) {
    lifted = [&](const PathPair& pp) { return accept({d.lift(pp.first), d.lift(pp.second)}); };
  }
  auto r = find_disjoint_spanning_paths(d.graph, map(q.first), map(*q.second), *c, opts, lifted);
  ans.status = r.status;
  if (r.witness) {
    ans.paths.push_back(d.lift(r.witness->first));
    ans.paths.push_back(d.lift(r.witness->second));
  }
  return ans;
}

SearchResult<CycleWitness> cycle_after_deleting(const Graph& g, const std::vector<int>& deleted,
                                                const SearchConstraints& c, const SearchOptions& opts) {
  Deletion d = delete_vertices(g, to_set(deleted));
  auto rc = restrict(d, c);
  if (!rc) {
    SearchResult<CycleWitness> r;
    r.contradictory = true;
    return r;
  }
  auto r = find_hamiltonian_cycle(d.graph, *rc, opts);
  if (r.witness) r.witness = canonical_cycle(d.lift(*r.witness));
  return r;
}

bool replay(const Graph& g, const PairQuery& q, const std::vector<PathWitness>& paths) {
  VertexSet rest = g.vertices() - to_set(q.deleted);
  if (!q.second) {
    return paths.size() == 1 && is_spanning_path(g, paths[0], q.first.first, q.first.second, rest, q.constraints);
  }
  if (paths.size() != 2) return false;
  VertexSet first;
  for (int v : paths[0]) {
    if (v < 0 || v >= g.order()) return false;
    first.insert(v);
  }
  if (!first.subset_of(rest)) return false;
  // Constraints apply to the union of both paths.
  for (const Edge& e : q.constraints.forbidden) {
    for (const auto& p : paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (Edge(p[i], p[i + 1]) == e) return false;
      }
    }
  }
  for (const Edge& e : q.constraints.required) {
    bool hit = false;
    for (const auto& p : paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) hit = hit || Edge(p[i], p[i + 1]) == e;
    }
    if (!hit) return false;
  }
  return is_spanning_path(g, paths[0], q.first.first, q.first.second, first) &&
         is_spanning_path(g, paths[1], q.second->first, q.second->second, rest - first);
}

}  // namespace k2ham
