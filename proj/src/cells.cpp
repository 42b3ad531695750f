#include "k2ham/cells.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "k2ham/error.hpp"
#include "k2ham/parallel.hpp"

namespace k2ham {

Cell::Cell(Graph g, std::array<int, 4> outer) : graph_(std::move(g)), outer_(outer) {
  const int n = graph_.order();
  if (n < 5) throw PreconditionError("a cell needs at least 5 vertices");
  for (int i = 0; i < 4; ++i) {
    if (outer_[i] < 0 || outer_[i] >= n) throw PreconditionError("outer vertex out of range");
    for (int j = 0; j < i; ++j) {
      if (outer_[i] == outer_[j]) throw PreconditionError("outer vertices must be distinct");
    }
  }
}

bool Cell::is_outer(int v) const { return std::find(outer_.begin(), outer_.end(), v) != outer_.end(); }

std::vector<int> Cell::inner() const {
  std::vector<int> out;
  for (int v = 0; v < graph_.order(); ++v) {
    if (!is_outer(v)) out.push_back(v);
  }
  return out;
}

bool good_pair(const Graph& g, int u, int v) { return evaluate(g, path_query({}, {u, v})).status == SearchStatus::found; }

bool good_pair_of_pairs(const Graph& g, EndpointPair p1, EndpointPair p2) {
  return evaluate(g, pair_query({}, p1, p2)).status == SearchStatus::found;
}

namespace {

struct Spec {
  std::string property;
  PairQuery query;
  bool expect_good;
};

// Pairs in the order the properties list them, as outer-role indices.
constexpr std::array<std::pair<int, int>, 4> kGoodPairs{{{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
constexpr std::array<std::pair<int, int>, 2> kBadPairs{{{0, 3}, {1, 2}}};

EndpointPair roles(const Cell& cell, std::pair<int, int> r) { return {cell.outer()[r.first], cell.outer()[r.second]}; }

std::vector<Spec> suitable_specs(const Cell& cell) {
  const auto& o = cell.outer();
  std::vector<Spec> out;
  for (auto p : kGoodPairs) out.push_back({"1.1", path_query({}, roles(cell, p)), true});
  for (auto p : kBadPairs) out.push_back({"1.2", path_query({}, roles(cell, p)), false});
  out.push_back({"1.3", pair_query({}, roles(cell, {0, 1}), roles(cell, {2, 3})), true});
  out.push_back({"1.4", pair_query({}, roles(cell, {0, 3}), roles(cell, {1, 2})), false});
  out.push_back({"1.4", pair_query({}, roles(cell, {0, 2}), roles(cell, {1, 3})), false});
  for (int v = 0; v < 4; ++v) {
    for (auto p : kGoodPairs) {
      if (p.first != v && p.second != v) out.push_back({"1.5(a)", path_query({o[v]}, roles(cell, p)), false});
    }
  }
  for (int v = 0; v < 4; ++v) {
    for (auto p : kBadPairs) {
      if (p.first != v && p.second != v) out.push_back({"1.5(b)", path_query({o[v]}, roles(cell, p)), false});
    }
  }
  // Deleting (a,c), (a,d), (b,c), (b,d) leaves the complementary pair.
  for (auto [x, y] : std::array<std::pair<int, int>, 4>{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}}) {
    std::vector<int> rest;
    for (int r = 0; r < 4; ++r) {
      if (r != x && r != y) rest.push_back(o[r]);
    }
    out.push_back({"1.6", path_query({o[x], o[y]}, {rest[0], rest[1]}), true});
  }
  return out;
}

// Bad configurations of 1.2, 1.4 and 1.5(a) after deleting `trigger`.
std::vector<PairQuery> bad_configurations(const Cell& cell, const std::vector<int>& trigger) {
  const auto& o = cell.outer();
  std::vector<PairQuery> out;
  for (auto p : kBadPairs) out.push_back(path_query(trigger, roles(cell, p)));
  out.push_back(pair_query(trigger, roles(cell, {0, 3}), roles(cell, {1, 2})));
  out.push_back(pair_query(trigger, roles(cell, {0, 2}), roles(cell, {1, 3})));
  for (int v = 0; v < 4; ++v) {
    for (auto p : kGoodPairs) {
      if (p.first == v || p.second == v) continue;
      auto del = trigger;
      del.push_back(o[v]);
      out.push_back(path_query(del, roles(cell, p)));
    }
  }
  return out;
}

PropertyCheck run_spec(const Graph& g, const Spec& s, const SearchOptions& opts) {
  PropertyCheck pc;
  pc.property = s.property;
  pc.query = s.query;
  pc.expect_good = s.expect_good;
  PairAnswer ans = evaluate(g, s.query, opts);
  pc.undecided = ans.status == SearchStatus::undecided;
  pc.passed = !pc.undecided && (ans.status == SearchStatus::found) == s.expect_good;
  pc.paths = std::move(ans.paths);
  return pc;
}

PropertyCheck run_becomes_good(const Cell& cell, const std::string& property, const std::vector<int>& trigger,
                               const SearchOptions& opts) {
  PropertyCheck pc;
  pc.property = property;
  pc.trigger = trigger;
  pc.query.deleted = trigger;
  for (const PairQuery& q : bad_configurations(cell, trigger)) {
    PairAnswer ans = evaluate(cell.graph(), q, opts);
    if (ans.status == SearchStatus::found) {
      pc.query = q;
      pc.passed = true;
      pc.undecided = false;
      pc.paths = std::move(ans.paths);
      return pc;
    }
    if (ans.status == SearchStatus::undecided) pc.undecided = true;
  }
  return pc;
}

template <class Task>
std::vector<PropertyCheck> run_all(const std::vector<Task>& tasks, int jobs) {
  std::vector<PropertyCheck> out(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { out[i] = tasks[i](); });
  return out;
}

// Appends `checks` to the verdict; returns whether all passed.  A decided
// failure anywhere in the ledger makes the verdict decided.
bool absorb(CellVerdict& v, std::vector<PropertyCheck> checks) {
  bool ok = true;
  for (auto& c : checks) {
    ok = ok && c.passed;
    v.ledger.push_back(std::move(c));
  }
  bool open = false;
  bool failed = false;
  for (const auto& c : v.ledger) {
    open = open || (!c.passed && c.undecided);
    failed = failed || (!c.passed && !c.undecided);
  }
  v.undecided = open && !failed;
  return ok;
}

using Task = std::function<PropertyCheck()>;

}  // namespace

CellVerdict check_suitable(const Cell& cell, const PredicateOptions& opts) {
  CellVerdict v;
  std::vector<Task> tasks;
  for (const Spec& s : suitable_specs(cell)) {
    tasks.push_back([&cell, s, &opts] { return run_spec(cell.graph(), s, opts.search); });
  }
  v.suitable = absorb(v, run_all(tasks, opts.jobs));
  return v;
}

CellVerdict check_k1_cell(const Cell& cell, const PredicateOptions& opts) {
  CellVerdict v = check_suitable(cell, opts);
  if (!v.suitable) return v;
  std::vector<Task> tasks;
  for (int x : cell.inner()) {
    tasks.push_back([&cell, x, &opts] { return run_becomes_good(cell, "K1", {x}, opts.search); });
  }
  v.k1 = absorb(v, run_all(tasks, opts.jobs));
  return v;
}

CellVerdict check_k2_cell(const Cell& cell, const PredicateOptions& opts) {
  CellVerdict v = check_suitable(cell, opts);
  if (!v.suitable) return v;
  const Graph& g = cell.graph();
  std::vector<Task> tasks;
  for (const Edge& e : g.edges()) {
    if (cell.is_outer(e.u) || cell.is_outer(e.v)) continue;
    tasks.push_back([&cell, e, &opts] { return run_becomes_good(cell, "2.1", {e.u, e.v}, opts.search); });
  }
  // 2.2-2.5: deleting an outer vertex and any neighbour leaves the named pair good.
  const std::array<std::pair<const char*, std::pair<int, std::pair<int, int>>>, 4> rules{{
      {"2.2", {0, {1, 2}}},
      {"2.3", {3, {1, 2}}},
      {"2.4", {1, {0, 3}}},
      {"2.5", {2, {0, 3}}},
  }};
  for (const auto& [name, rule] : rules) {
    int w = cell.outer()[rule.first];
    g.neighbors(w).for_each([&](int x) {
      Spec s{name, path_query({w, x}, roles(cell, rule.second)), true};
      tasks.push_back([&g, s, &opts] { return run_spec(g, s, opts.search); });
    });
  }
  v.k2 = absorb(v, run_all(tasks, opts.jobs));
  return v;
}

std::string describe(const PropertyCheck& check, const Cell& cell) {
  auto name = [&](int v) -> std::string {
    for (int r = 0; r < 4; ++r) {
      if (cell.outer()[r] == v) return std::string(1, static_cast<char>('a' + r));
    }
    return std::to_string(v);
  };
  auto pair = [&](EndpointPair p) { return "(" + name(p.first) + "," + name(p.second) + ")"; };
  std::string s = check.property + ": ";
  if (!check.trigger.empty()) {
    s += "delete";
    for (int x : check.trigger) s += " " + name(x);
    s += " -> ";
    if (check.query.first.first < 0) {
      return s + (check.undecided ? "undecided" : "no bad configuration becomes good  FAIL");
    }
  }
  if (check.query.second) {
    s += "(" + pair(check.query.first) + "," + pair(*check.query.second) + ")";
  } else {
    s += pair(check.query.first);
  }
  s += (check.trigger.empty() ? (check.expect_good ? " good" : " bad") : " good");
  s += " in G";
  for (int x : check.query.deleted) s += "-" + name(x);
  if (check.undecided) return s + "  undecided";
  return s + (check.passed ? "  ok" : "  FAIL");
}

std::array<std::array<int, 4>, 4> labelling_orbit(const std::array<int, 4>& q) {
  auto [a, b, c, d] = q;
  return {{{a, b, c, d}, {d, c, b, a}, {b, a, d, c}, {c, d, a, b}}};
}

namespace {

// Memoised goodness queries shared across all labellings of one graph.
class PairTable {
 public:
  PairTable(const Graph& g, int jobs) : g_(g), n_(g.order()) {
    // pair goodness in g (row n) and in every g - v (row v)
    table_.assign(static_cast<std::size_t>(n_ + 1) * n_ * n_, 0);
    parallel_for(static_cast<std::size_t>(n_ + 1), jobs, [&](std::size_t row) {
      int v = static_cast<int>(row);
      for (int s = 0; s < n_; ++s) {
        for (int t = s + 1; t < n_; ++t) {
          if (s == v || t == v) continue;
          PairQuery q = path_query(v == n_ ? std::vector<int>{} : std::vector<int>{v}, {s, t});
          bool good = evaluate(g_, q).status == SearchStatus::found;
          at(v, s, t) = at(v, t, s) = good ? 1 : 0;
        }
      }
    });
  }

  bool good(int s, int t) const { return at(n_, s, t) != 0; }
  bool good_without(int v, int s, int t) const { return at(v, s, t) != 0; }

  bool good_without2(int x, int y, int s, int t) {
    auto key = std::make_tuple(std::min(x, y), std::max(x, y), std::min(s, t), std::max(s, t));
    auto it = pair2_.find(key);
    if (it != pair2_.end()) return it->second;
    bool r = evaluate(g_, path_query({x, y}, {s, t})).status == SearchStatus::found;
    pair2_.emplace(key, r);
    return r;
  }

  bool good_pairs(EndpointPair p, EndpointPair q) {
    auto norm = [](EndpointPair e) { return EndpointPair{std::min(e.first, e.second), std::max(e.first, e.second)}; };
    auto a = norm(p);
    auto b = norm(q);
    if (b < a) std::swap(a, b);
    auto key = std::make_pair(a, b);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;
    bool r = evaluate(g_, pair_query({}, a, b)).status == SearchStatus::found;
    pairs_.emplace(key, r);
    return r;
  }

 private:
  unsigned char& at(int v, int s, int t) { return table_[(static_cast<std::size_t>(v) * n_ + s) * n_ + t]; }
  unsigned char at(int v, int s, int t) const { return table_[(static_cast<std::size_t>(v) * n_ + s) * n_ + t]; }

  const Graph& g_;
  int n_;
  std::vector<unsigned char> table_;
  std::map<std::tuple<int, int, int, int>, bool> pair2_;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, bool> pairs_;
};

bool suitable_with(PairTable& t, const std::array<int, 4>& o) {
  auto [a, b, c, d] = o;
  if (!t.good(a, b) || !t.good(a, c) || !t.good(b, d) || !t.good(c, d)) return false;
  if (t.good(a, d) || t.good(b, c)) return false;
  for (int v = 0; v < 4; ++v) {
    for (auto p : kGoodPairs) {
      if (p.first != v && p.second != v && t.good_without(o[v], o[p.first], o[p.second])) return false;
    }
    for (auto p : kBadPairs) {
      if (p.first != v && p.second != v && t.good_without(o[v], o[p.first], o[p.second])) return false;
    }
  }
  if (!t.good_without2(a, c, b, d) || !t.good_without2(a, d, b, c) || !t.good_without2(b, c, a, d) ||
      !t.good_without2(b, d, a, c)) {
    return false;
  }
  if (!t.good_pairs({a, b}, {c, d})) return false;
  if (t.good_pairs({a, d}, {b, c}) || t.good_pairs({a, c}, {b, d})) return false;
  return true;
}

}  // namespace

std::vector<std::array<int, 4>> find_cells(const Graph& g, const FindCellsOptions& opts) {
  const int n = g.order();
  if (n < 5) throw PreconditionError("cells need at least 5 vertices");
  PairTable table(g, opts.jobs);
  std::vector<std::array<int, 4>> reps;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          std::array<int, 4> q{a, b, c, d};
          auto orbit = labelling_orbit(q);
          if (*std::min_element(orbit.begin(), orbit.end()) != q) continue;
          if (suitable_with(table, q)) reps.push_back(q);
        }
      }
    }
  }

  if (opts.level != CellLevel::suitable) {
    std::vector<char> keep(reps.size(), 0);
    PredicateOptions po;
    // labellings fan out; each check runs single-threaded
    parallel_for(reps.size(), opts.jobs, [&](std::size_t i) {
      Cell cell(g, reps[i]);
      CellVerdict v = opts.level == CellLevel::k1 ? check_k1_cell(cell, po) : check_k2_cell(cell, po);
      keep[i] = opts.level == CellLevel::k1 ? v.k1 : v.k2;
    });
    std::vector<std::array<int, 4>> kept;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (keep[i]) kept.push_back(reps[i]);
    }
    reps = std::move(kept);
  }

  if (opts.dedup) return reps;
  std::set<std::array<int, 4>> all;
  for (const auto& q : reps) {
    for (const auto& r : labelling_orbit(q)) all.insert(r);
  }
  return {all.begin(), all.end()};
}

GammaResult build_gamma(const std::vector<Cell>& cells, GammaVariant variant, bool verify,
                        const PredicateOptions& opts) {
  const int k = static_cast<int>(cells.size());
  if (k < 3 || k % 2 == 0) throw PreconditionError("the identification needs an odd number of cells, at least 3");
  if (verify) {
    for (int i = 0; i < k; ++i) {
      CellVerdict v = variant == GammaVariant::k1 ? check_k1_cell(cells[i], opts) : check_k2_cell(cells[i], opts);
      bool ok = variant == GammaVariant::k1 ? v.k1 : v.k2;
      if (!ok) {
        throw PreconditionError("cell " + std::to_string(i) + " is not a " +
                                (variant == GammaVariant::k1 ? "K1" : "K2") + "-cell" +
                                (v.undecided ? " (undecided)" : ""));
      }
    }
  }

  GammaResult res;
  res.to_global.resize(static_cast<std::size_t>(k));
  int next = cells[0].graph().order();
  res.to_global[0].resize(static_cast<std::size_t>(next));
  for (int v = 0; v < next; ++v) res.to_global[0][v] = v;
  for (int i = 1; i < k; ++i) {
    const Cell& cell = cells[i];
    const auto& prev = res.to_global[i - 1];
    auto& map = res.to_global[i];
    map.assign(static_cast<std::size_t>(cell.graph().order()), -1);
    map[cell.a()] = prev[cells[i - 1].b()];
    map[cell.d()] = prev[cells[i - 1].c()];
    // The last cell closes the ring onto cell 0.
    if (i == k - 1) {
      map[cell.b()] = res.to_global[0][cells[0].a()];
      map[cell.c()] = res.to_global[0][cells[0].d()];
    }
    for (int v = 0; v < cell.graph().order(); ++v) {
      if (map[v] < 0) map[v] = next++;
    }
  }
  if (next > kMaxVertices) throw CapacityError("identified graph exceeds " + std::to_string(kMaxVertices) + " vertices");

  std::set<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (const Edge& e : cells[i].graph().edges()) edges.insert(Edge(res.to_global[i][e.u], res.to_global[i][e.v]));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  res.graph = Graph::from_edges(next, list);
  return res;
}

}  // namespace k2ham
