#include "k2ham/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "k2ham/error.hpp"
#include "k2ham/parallel.hpp"

namespace k2ham {

Fragment::Fragment(Graph g, std::array<int, 3> att) : graph(std::move(g)), attachments(att) {
  for (int i = 0; i < 3; ++i) {
    if (att[i] < 0 || att[i] >= graph.order()) throw PreconditionError("attachment out of range");
    for (int j = 0; j < i; ++j) {
      if (att[i] == att[j]) throw PreconditionError("attachments must be distinct");
    }
  }
}

namespace {

std::array<int, 3> three(const std::vector<int>& v) { return {v[0], v[1], v[2]}; }

void require_cubic_vertex(const Graph& g, int v, const char* role) {
  if (v < 0 || v >= g.order()) throw PreconditionError(std::string(role) + " out of range");
  if (g.degree(v) != 3) throw PreconditionError(std::string(role) + " must be a cubic vertex");
}

}  // namespace

Fragment fragment_from_cubic_vertex(const Graph& g, int v) {
  require_cubic_vertex(g, v, "fragment vertex");
  Deletion d = delete_vertices(g, VertexSet{v});
  std::vector<int> att;
  g.neighbors(v).for_each([&](int w) { att.push_back(d.from_original[w]); });
  return Fragment(std::move(d.graph), three(att));
}

Fragment trivial_fragment_at(const Graph& g, int v) {
  require_cubic_vertex(g, v, "fragment vertex");
  VertexSet closed = g.neighbors(v);
  closed.insert(v);
  Deletion d = induced_subgraph(g, closed);
  std::vector<int> att;
  g.neighbors(v).for_each([&](int w) { att.push_back(d.from_original[w]); });
  return Fragment(std::move(d.graph), three(att));
}

GlueResult glue(const Fragment& first, const Fragment& second) {
  GlueResult res;
  res.both_trivial = first.trivial() && second.trivial();
  const int n1 = first.graph.order();
  res.from_first.resize(static_cast<std::size_t>(n1));
  for (int v = 0; v < n1; ++v) res.from_first[v] = v;
  res.from_second.assign(static_cast<std::size_t>(second.graph.order()), -1);
  for (int i = 0; i < 3; ++i) res.from_second[second.attachments[i]] = first.attachments[i];
  int next = n1;
  for (int& m : res.from_second) {
    if (m < 0) m = next++;
  }
  std::set<Edge> edges;
  for (const Edge& e : first.graph.edges()) edges.insert(e);
  for (const Edge& e : second.graph.edges()) edges.insert(Edge(res.from_second[e.u], res.from_second[e.v]));
  std::vector<Edge> list(edges.begin(), edges.end());
  res.graph = Graph::from_edges(next, list);
  return res;
}

namespace {

std::array<int, 2> other_neighbors(const Graph& h, int x, int y) {
  std::vector<int> out;
  h.neighbors(x).for_each([&](int w) {
    if (w != y) out.push_back(w);
  });
  return {out[0], out[1]};
}

void validate_g_edges(const Graph& g, int a, int b, int c, int d) {
  const int n = g.order();
  for (int v : {a, b, c, d}) {
    if (v < 0 || v >= n) throw PreconditionError("edge label out of range");
  }
  if (!g.has_edge(a, b) || !g.has_edge(c, d)) throw PreconditionError("ab and cd must be edges");
  if (a == c || a == d || b == c || b == d) throw PreconditionError("ab and cd must be independent");
}

void validate_h_edge(const Graph& h, int x, int y) {
  require_cubic_vertex(h, x, "x");
  require_cubic_vertex(h, y, "y");
  if (!h.has_edge(x, y)) throw PreconditionError("x and y must be adjacent");
}

std::array<int, 4> primes_for(const Graph& h, int x, int y, std::optional<std::array<int, 4>> primes) {
  auto nx = other_neighbors(h, x, y);
  auto ny = other_neighbors(h, y, x);
  if (!primes) return {nx[0], nx[1], ny[0], ny[1]};
  auto p = *primes;
  if (std::minmax(p[0], p[1]) != std::minmax(nx[0], nx[1]) || std::minmax(p[2], p[3]) != std::minmax(ny[0], ny[1])) {
    throw PreconditionError("primed vertices must be the other neighbours of x and of y");
  }
  return p;
}

}  // namespace

DotSpec make_dot_spec(const Graph& g, const Graph& h, int a, int b, int c, int d, int x, int y,
                      std::optional<std::array<int, 4>> primes) {
  if (g.order() < 6 || h.order() < 6) throw PreconditionError("the dot product needs graphs on at least 6 vertices");
  validate_g_edges(g, a, b, c, d);
  validate_h_edge(h, x, y);
  auto p = primes_for(h, x, y, primes);
  if (p[0] == p[2] || p[0] == p[3] || p[1] == p[2] || p[1] == p[3]) {
    throw PreconditionError("x and y must not share a neighbour");
  }
  return {a, b, c, d, x, y, p[0], p[1], p[2], p[3]};
}

DotResult dot_product(const Graph& g, const Graph& h, const DotSpec& s) {
  make_dot_spec(g, h, s.a, s.b, s.c, s.d, s.x, s.y, std::array<int, 4>{s.a2, s.b2, s.c2, s.d2});
  DotResult res;
  const int n = g.order();
  res.from_g.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) res.from_g[v] = v;
  res.from_h.assign(static_cast<std::size_t>(h.order()), -1);
  int next = n;
  for (int v = 0; v < h.order(); ++v) {
    if (v != s.x && v != s.y) res.from_h[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e != Edge(s.a, s.b) && e != Edge(s.c, s.d)) edges.push_back(e);
  }
  for (const Edge& e : h.edges()) {
    if (!e.has(s.x) && !e.has(s.y)) edges.emplace_back(res.from_h[e.u], res.from_h[e.v]);
  }
  edges.emplace_back(s.a, res.from_h[s.a2]);
  edges.emplace_back(s.b, res.from_h[s.b2]);
  edges.emplace_back(s.c, res.from_h[s.c2]);
  edges.emplace_back(s.d, res.from_h[s.d2]);
  res.graph = Graph::from_edges(next, edges);
  return res;
}

bool ConditionReport::holds(const std::string& condition) const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.condition != condition) continue;
    any = true;
    if (!c.passed) return false;
  }
  return any;
}

namespace {

using Task = std::function<ConditionCheck()>;

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

// First alternative that is realised.
ConditionCheck any_of(std::string condition, std::string detail, const Graph& g, std::vector<PairQuery> alts,
                      const SearchOptions& opts, const PathPairFilter& accept = {}) {
  ConditionCheck cc;
  cc.condition = std::move(condition);
  cc.detail = std::move(detail);
  if (!alts.empty()) cc.query = alts.front();
  for (const auto& q : alts) {
    PairAnswer ans = evaluate(g, q, opts, accept);
    if (ans.status == SearchStatus::found) {
      cc.query = q;
      cc.passed = true;
      cc.undecided = false;
      cc.paths = std::move(ans.paths);
      return cc;
    }
    if (ans.status == SearchStatus::undecided) cc.undecided = true;
  }
  return cc;
}

ConditionCheck cycle_check(std::string condition, std::string detail, const Graph& g, std::vector<int> deleted,
                           SearchConstraints c, const SearchOptions& opts) {
  ConditionCheck cc;
  cc.condition = std::move(condition);
  cc.detail = std::move(detail);
  auto r = cycle_after_deleting(g, deleted, c, opts);
  cc.query.deleted = std::move(deleted);
  cc.query.constraints = std::move(c);
  cc.passed = r.found();
  cc.undecided = r.undecided();
  cc.cycle = std::move(r.witness);
  return cc;
}

ConditionReport run_checks(const std::vector<Task>& tasks, int jobs, bool stop_on_fail) {
  ConditionReport rep;
  if (stop_on_fail) {
    for (const auto& t : tasks) {
      rep.checks.push_back(t());
      if (!rep.checks.back().passed) break;
    }
  } else {
    rep.checks.resize(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) { rep.checks[i] = tasks[i](); });
  }
  bool failed = false;
  bool open = false;
  for (const auto& c : rep.checks) {
    failed = failed || (!c.passed && !c.undecided);
    open = open || (!c.passed && c.undecided);
  }
  rep.passed = !failed && !open && rep.checks.size() == tasks.size();
  rep.undecided = open && !failed;
  return rep;
}

std::vector<Task> g_tasks(const Graph& g, int a, int b, int c, int d, const SearchOptions& opts) {
  const Edge ab(a, b);
  const Edge cd(c, d);
  const SearchConstraints neither{{}, {ab, cd}};
  std::vector<Task> tasks;
  // (iii) and (ii) first: few searches, and they fail fast in label scans.
  for (auto [v, req] : std::array<std::pair<int, Edge>, 4>{{{a, cd}, {b, cd}, {c, ab}, {d, ab}}}) {
    tasks.push_back([&g, v, req, &opts] {
      return cycle_check("(iii)", "G-" + std::to_string(v) + " through " + edge_name(req.u, req.v), g, {v},
                         {{req}, {}}, opts);
    });
  }
  for (int s : {a, b}) {
    for (int t : {c, d}) {
      tasks.push_back([&g, s, t, neither, &opts] {
        return any_of("(ii)", "path " + edge_name(s, t), g, {path_query({}, {s, t}, neither)}, opts);
      });
    }
  }
  tasks.push_back([&g, a, b, c, d, neither, &opts] {
    return any_of("(ii)", "paths " + edge_name(a, b) + ", " + edge_name(c, d), g,
                  {pair_query({}, {a, b}, {c, d}, neither)}, opts);
  });
  for (const Edge& e : g.edges()) {
    if (e == ab || e == cd) continue;
    tasks.push_back([&g, e, a, b, c, d, ab, cd, neither, &opts] {
      std::vector<int> del{e.u, e.v};
      return any_of("(i)", "edge " + edge_name(e.u, e.v), g,
                    {path_query(del, {a, b}, {{}, {cd}}), path_query(del, {c, d}, {{}, {ab}}),
                     pair_query(del, {a, c}, {b, d}, neither), pair_query(del, {a, d}, {b, c}, neither)},
                    opts);
    });
  }
  return tasks;
}

std::vector<Task> h_tasks(const Graph& h, int x, int y, std::array<int, 4> p, const SearchOptions& opts) {
  auto [a2, b2, c2, d2] = p;
  std::vector<Task> tasks;
  for (auto [del, label] : std::array<std::pair<std::vector<int>, const char*>, 6>{{
           {{x}, "(iv)"},
           {{y}, "(iv)"},
           {{x, a2}, "(vi)"},
           {{x, b2}, "(vi)"},
           {{y, c2}, "(vi)"},
           {{y, d2}, "(vi)"},
       }}) {
    tasks.push_back([&h, del, label, &opts] {
      std::string detail = "H";
      for (int v : del) detail += "-" + std::to_string(v);
      return cycle_check(label, detail, h, del, {}, opts);
    });
  }
  tasks.push_back([&h, x, y, a2, b2, c2, d2, &opts] {
    return any_of("(iv)", "paths " + edge_name(a2, b2) + ", " + edge_name(c2, d2) + " in H-x-y", h,
                  {pair_query({x, y}, {a2, b2}, {c2, d2})}, opts);
  });
  for (const Edge& e : h.edges()) {
    if (e.has(x) || e.has(y)) continue;
    tasks.push_back([&h, e, x, y, a2, b2, c2, d2, &opts] {
      std::vector<int> del{x, y, e.u, e.v};
      return any_of("(v)", "edge " + edge_name(e.u, e.v), h,
                    {path_query(del, {a2, c2}), path_query(del, {a2, d2}), path_query(del, {b2, c2}),
                     path_query(del, {b2, d2}), pair_query(del, {a2, c2}, {b2, d2}),
                     pair_query(del, {a2, d2}, {b2, c2})},
                    opts);
    });
  }
  return tasks;
}

void check_g_side(const Graph& g, int a, int b, int c, int d) {
  validate_g_edges(g, a, b, c, d);
  for (int s : {a, b}) {
    if (g.has_edge(s, c) || g.has_edge(s, d)) throw PreconditionError("a and b must not be adjacent to c or d");
  }
}

bool g_side_ok(const Graph& g, int a, int b, int c, int d) {
  return !(g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d));
}

std::array<int, 4> check_h_side(const Graph& h, int x, int y, std::optional<std::array<int, 4>> primes) {
  validate_h_edge(h, x, y);
  auto p = primes_for(h, x, y, primes);
  if (h.has_edge(p[0], p[1]) || h.has_edge(p[2], p[3])) {
    throw PreconditionError("the neighbours of x (and of y) must be non-adjacent");
  }
  return p;
}

}  // namespace

ConditionReport check_dot_conditions_g(const Graph& g, int a, int b, int c, int d, const PredicateOptions& opts) {
  check_g_side(g, a, b, c, d);
  return run_checks(g_tasks(g, a, b, c, d, opts.search), opts.jobs, false);
}

ConditionReport check_dot_conditions_h(const Graph& h, int x, int y, std::optional<std::array<int, 4>> primes,
                                       const PredicateOptions& opts) {
  auto p = check_h_side(h, x, y, primes);
  return run_checks(h_tasks(h, x, y, p, opts.search), opts.jobs, false);
}

namespace {

// Candidates in order; with a limit, blocks are tested in parallel until
// enough have passed, so the answer never depends on the job count.
template <class Candidate, class Test>
std::vector<Candidate> scan(const std::vector<Candidate>& candidates, std::size_t limit, int jobs, Test test) {
  std::vector<Candidate> out;
  const std::size_t block = limit ? std::max<std::size_t>(1, static_cast<std::size_t>(jobs) * 4) : candidates.size();
  for (std::size_t lo = 0; lo < candidates.size(); lo += block) {
    const std::size_t hi = std::min(candidates.size(), lo + block);
    std::vector<char> ok(hi - lo, 0);
    parallel_for(hi - lo, jobs, [&](std::size_t i) { ok[i] = test(candidates[lo + i]) ? 1 : 0; });
    for (std::size_t i = 0; i < ok.size(); ++i) {
      if (ok[i]) out.push_back(candidates[lo + i]);
      if (limit && out.size() == limit) return out;
    }
  }
  return out;
}

}  // namespace

std::vector<std::array<int, 4>> find_dot_labels_g(const Graph& g, std::size_t limit, const PredicateOptions& opts) {
  std::vector<std::array<int, 4>> candidates;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.has(f.u) || e.has(f.v)) continue;
      if (g_side_ok(g, e.u, e.v, f.u, f.v)) candidates.push_back({e.u, e.v, f.u, f.v});
    }
  }
  return scan(candidates, limit, opts.jobs, [&](const std::array<int, 4>& q) {
    return run_checks(g_tasks(g, q[0], q[1], q[2], q[3], opts.search), 1, true).passed;
  });
}

std::vector<Edge> find_dot_labels_h(const Graph& h, std::size_t limit, const PredicateOptions& opts) {
  std::vector<Edge> candidates;
  for (const Edge& e : h.edges()) {
    if (h.degree(e.u) != 3 || h.degree(e.v) != 3) continue;
    auto p = primes_for(h, e.u, e.v, std::nullopt);
    if (h.has_edge(p[0], p[1]) || h.has_edge(p[2], p[3])) continue;
    if (p[0] == p[2] || p[0] == p[3] || p[1] == p[2] || p[1] == p[3]) continue;
    candidates.push_back(e);
  }
  return scan(candidates, limit, opts.jobs, [&](const Edge& e) {
    auto p = primes_for(h, e.u, e.v, std::nullopt);
    return run_checks(h_tasks(h, e.u, e.v, p, opts.search), 1, true).passed;
  });
}

namespace {

std::vector<Task> bullet_tasks(const Graph& g, int a, int b, int c, int d, int xg, int yg,
                               const SearchOptions& opts) {
  const Edge ab(a, b);
  const Edge cd(c, d);
  std::vector<Task> tasks;
  for (auto [v, label] : std::array<std::pair<int, const char*>, 2>{{{xg, "bullet 1"}, {yg, "bullet 2"}}}) {
    tasks.push_back([&g, v, label, a, b, c, d, ab, cd, &opts] {
      return any_of(label, "G-" + std::to_string(v), g,
                    {path_query({v}, {a, b}, {{}, {cd}}), path_query({v}, {c, d}, {{}, {ab}})}, opts);
    });
  }
  tasks.push_back([&g, a, b, c, d, xg, yg, &opts] {
    auto split = [xg, yg](const PathPair& pp) {
      auto has = [](const PathWitness& p, int v) { return std::find(p.begin(), p.end(), v) != p.end(); };
      return (has(pp.first, xg) && has(pp.second, yg)) || (has(pp.first, yg) && has(pp.second, xg));
    };
    return any_of("bullet 3", "paths " + edge_name(a, b) + ", " + edge_name(c, d) + " separating " + edge_name(xg, yg),
                  g, {pair_query({}, {a, b}, {c, d})}, opts, split);
  });
  return tasks;
}

bool bullet_edge_ok(const Graph& g, int a, int b, int c, int d, int xg, int yg) {
  if (g.degree(xg) != 3 || g.degree(yg) != 3 || !g.has_edge(xg, yg)) return false;
  VertexSet closed = g.neighbors(xg) | g.neighbors(yg);
  closed.insert(xg);
  closed.insert(yg);
  return !(closed.contains(a) || closed.contains(b) || closed.contains(c) || closed.contains(d));
}

}  // namespace

ConditionReport check_iterative_bullets(const Graph& g, int a, int b, int c, int d, int xg, int yg,
                                        const PredicateOptions& opts) {
  validate_g_edges(g, a, b, c, d);
  require_cubic_vertex(g, xg, "x_G");
  require_cubic_vertex(g, yg, "y_G");
  if (!g.has_edge(xg, yg)) throw PreconditionError("x_G and y_G must be adjacent");
  if (!bullet_edge_ok(g, a, b, c, d, xg, yg)) {
    throw PreconditionError("the closed neighbourhoods of x_G and y_G must avoid a, b, c, d");
  }
  return run_checks(bullet_tasks(g, a, b, c, d, xg, yg, opts.search), opts.jobs, false);
}

std::vector<Edge> find_iterative_edges(const Graph& g, int a, int b, int c, int d, std::size_t limit,
                                       const PredicateOptions& opts) {
  validate_g_edges(g, a, b, c, d);
  std::vector<Edge> candidates;
  for (const Edge& e : g.edges()) {
    if (bullet_edge_ok(g, a, b, c, d, e.u, e.v)) candidates.push_back(e);
  }
  return scan(candidates, limit, opts.jobs, [&](const Edge& e) {
    return run_checks(bullet_tasks(g, a, b, c, d, e.u, e.v, opts.search), 1, true).passed;
  });
}

std::optional<ExtendableCycle> check_extendable_5_cycle(const Graph& g, const std::array<int, 5>& cyc,
                                                        const PredicateOptions& opts) {
  const int n = g.order();
  VertexSet on;
  for (int i = 0; i < 5; ++i) {
    int v = cyc[i];
    if (v < 0 || v >= n || g.degree(v) != 3 || on.contains(v)) return std::nullopt;
    on.insert(v);
  }
  for (int i = 0; i < 5; ++i) {
    if (!g.has_edge(cyc[i], cyc[(i + 1) % 5])) return std::nullopt;
  }
  std::array<int, 5> outside{};
  for (int i = 0; i < 5; ++i) {
    VertexSet off = g.neighbors(cyc[i]) - on;
    // a cubic vertex on a 5-cycle with a chord would have no off-cycle neighbour
    if (off.size() != 1) return std::nullopt;
    outside[i] = off.first();
  }
  auto at = [&](int i) { return cyc[((i % 5) + 5) % 5]; };

  struct Job {
    int deleted;
    SearchConstraints c;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < 5; ++i) {
    const Edge opposite(at(i - 2), at(i + 2));
    jobs.push_back({at(i), {{}, {opposite}}});
    jobs.push_back({outside[i],
                    {{Edge(at(i - 2), at(i - 1)), Edge(at(i - 1), at(i)), Edge(at(i), at(i + 1)),
                      Edge(at(i + 1), at(i + 2))},
                     {opposite}}});
  }
  std::vector<SearchResult<CycleWitness>> results(jobs.size());
  parallel_for(jobs.size(), opts.jobs, [&](std::size_t k) {
    results[k] = cycle_after_deleting(g, {jobs[k].deleted}, jobs[k].c, opts.search);
  });
  ExtendableCycle out;
  out.cycle = cyc;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (!results[k].found()) return std::nullopt;
    out.witnesses.push_back({jobs[k].deleted, jobs[k].c, std::move(*results[k].witness)});
  }
  return out;
}

std::vector<ExtendableCycle> find_extendable_5_cycles(const Graph& g, const PredicateOptions& opts) {
  // 5-cycles v0..v4 with v0 smallest and v1 < v4, over cubic vertices only.
  std::vector<std::array<int, 5>> cycles;
  const int n = g.order();
  for (int v0 = 0; v0 < n; ++v0) {
    if (g.degree(v0) != 3) continue;
    auto ok = [&](int v) { return v > v0 && g.degree(v) == 3; };
    g.neighbors(v0).for_each([&](int v1) {
      if (!ok(v1)) return;
      g.neighbors(v1).for_each([&](int v2) {
        if (!ok(v2)) return;
        g.neighbors(v2).for_each([&](int v3) {
          if (!ok(v3) || v3 == v1) return;
          g.neighbors(v3).for_each([&](int v4) {
            if (!ok(v4) || v4 <= v1 || v4 == v2 || !g.has_edge(v4, v0)) return;
            cycles.push_back({v0, v1, v2, v3, v4});
          });
        });
      });
    });
  }
  std::sort(cycles.begin(), cycles.end());
  std::vector<std::optional<ExtendableCycle>> found(cycles.size());
  PredicateOptions inner = opts;
  inner.jobs = 1;
  parallel_for(cycles.size(), opts.jobs, [&](std::size_t i) { found[i] = check_extendable_5_cycle(g, cycles[i], inner); });
  std::vector<ExtendableCycle> out;
  for (auto& f : found) {
    if (f) out.push_back(std::move(*f));
  }
  return out;
}

}  // namespace k2ham
