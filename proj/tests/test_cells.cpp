#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "k2ham/error.hpp"
#include "k2ham/cells.hpp"
#include "k2ham/named.hpp"
#include "k2ham/predicates.hpp"
#include "oracle.hpp"

using namespace k2ham;

namespace {

// Property lists evaluated literally with the permutation oracle.
class BruteCell {
 public:
  explicit BruteCell(const Graph& g) : g_(g) {}

  bool good(std::vector<int> gone, int s, int t) {
    for (int v : gone) {
      if (v == s || v == t) return false;
    }
    std::sort(gone.begin(), gone.end());
    if (s > t) std::swap(s, t);
    auto key = std::make_tuple(gone, s, t);
    auto it = paths_.find(key);
    if (it != paths_.end()) return it->second;
    bool r = oracle::has_path(g_, rest(gone), s, t);
    paths_[key] = r;
    return r;
  }

  bool good_pp(std::vector<int> gone, int s1, int t1, int s2, int t2) {
    for (int v : gone) {
      if (v == s1 || v == t1 || v == s2 || v == t2) return false;
    }
    std::sort(gone.begin(), gone.end());
    auto key = std::make_tuple(gone, std::min(s1, t1) * 100 + std::max(s1, t1), std::min(s2, t2) * 100 + std::max(s2, t2));
    if (std::get<1>(key) > std::get<2>(key)) std::swap(std::get<1>(key), std::get<2>(key));
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;
    auto vs = rest(gone);
    std::vector<int> others;
    for (int v : vs) {
      if (v != s1 && v != t1 && v != s2 && v != t2) others.push_back(v);
    }
    bool r = false;
    const int k = static_cast<int>(others.size());
    for (int mask = 0; mask < (1 << k) && !r; ++mask) {
      std::vector<int> p{s1, t1}, q{s2, t2};
      for (int i = 0; i < k; ++i) ((mask >> i) & 1 ? p : q).push_back(others[i]);
      r = oracle::has_path(g_, p, s1, t1) && oracle::has_path(g_, q, s2, t2);
    }
    pairs_[key] = r;
    return r;
  }

  bool suitable(int a, int b, int c, int d) {
    if (!(good({}, a, b) && good({}, a, c) && good({}, b, d) && good({}, c, d))) return false;
    if (good({}, a, d) || good({}, b, c)) return false;
    if (!good_pp({}, a, b, c, d)) return false;
    if (good_pp({}, a, d, b, c) || good_pp({}, a, c, b, d)) return false;
    const std::array<int, 4> o{a, b, c, d};
    for (int v : o) {
      for (auto [s, t] : {std::pair{a, b}, {a, c}, {b, d}, {c, d}, {a, d}, {b, c}}) {
        if (s != v && t != v && good({v}, s, t)) return false;
      }
    }
    return good({a, c}, b, d) && good({a, d}, b, c) && good({b, c}, a, d) && good({b, d}, a, c);
  }

  // Some bad pair of 1.2, 1.4 or 1.5(a) becomes good once `gone` is deleted.
  bool rescued(const std::vector<int>& gone, int a, int b, int c, int d) {
    if (good(gone, a, d) || good(gone, b, c)) return true;
    if (good_pp(gone, a, d, b, c) || good_pp(gone, a, c, b, d)) return true;
    for (int v : {a, b, c, d}) {
      auto more = gone;
      more.push_back(v);
      for (auto [s, t] : {std::pair{a, b}, {a, c}, {b, d}, {c, d}}) {
        if (s != v && t != v && good(more, s, t)) return true;
      }
    }
    return false;
  }

  bool k1(int a, int b, int c, int d) {
    if (!suitable(a, b, c, d)) return false;
    for (int x = 0; x < g_.order(); ++x) {
      if (x == a || x == b || x == c || x == d) continue;
      if (!rescued({x}, a, b, c, d)) return false;
    }
    return true;
  }

  bool k2(int a, int b, int c, int d) {
    if (!suitable(a, b, c, d)) return false;
    auto outer = [&](int v) { return v == a || v == b || v == c || v == d; };
    for (const Edge& e : g_.edges()) {
      if (!outer(e.u) && !outer(e.v) && !rescued({e.u, e.v}, a, b, c, d)) return false;
    }
    for (auto [w, s, t] : {std::tuple{a, b, c}, {d, b, c}, {b, a, d}, {c, a, d}}) {
      bool ok = true;
      g_.neighbors(w).for_each([&](int x) { ok = ok && good({w, x}, s, t); });
      if (!ok) return false;
    }
    return true;
  }

 private:
  std::vector<int> rest(const std::vector<int>& gone) const {
    std::vector<int> vs;
    for (int v = 0; v < g_.order(); ++v) {
      if (std::find(gone.begin(), gone.end(), v) == gone.end()) vs.push_back(v);
    }
    return vs;
  }

  const Graph& g_;
  std::map<std::tuple<std::vector<int>, int, int>, bool> paths_;
  std::map<std::tuple<std::vector<int>, int, int>, bool> pairs_;
};

Cell j18_cell() { return Cell(named::j18(), named::kJ18Outer); }

}  // namespace

TEST_CASE("good pairs on J18 and a 4-cycle") {
  Graph j = named::j18();
  auto [a, b, c, d] = named::kJ18Outer;
  CHECK(good_pair(j, a, b));
  CHECK_FALSE(good_pair(j, a, d));
  CHECK(good_pair_of_pairs(j, {a, b}, {c, d}));
  CHECK_FALSE(good_pair_of_pairs(j, {a, c}, {b, d}));
  CHECK(good_pair_of_pairs(named::cycle(4), {0, 1}, {2, 3}));
}

TEST_CASE("the J18 cell is suitable, a K1-cell and a K2-cell") {
  Cell cell = j18_cell();
  auto s = check_suitable(cell);
  CHECK(s.suitable);
  CHECK_FALSE(s.undecided);
  auto k1 = check_k1_cell(cell);
  CHECK(k1.suitable);
  CHECK(k1.k1);
  auto k2 = check_k2_cell(cell);
  CHECK(k2.suitable);
  CHECK(k2.k2);
  for (const auto& entry : k2.ledger) {
    CHECK(entry.passed);
    if (!entry.paths.empty()) CHECK(replay(cell.graph(), entry.query, entry.paths));
    CHECK_FALSE(describe(entry, cell).empty());
  }
}

TEST_CASE("the J18 ledger records the missing ad-path and the missing (ac, bd) realisation") {
  Cell cell = j18_cell();
  auto v = check_suitable(cell);
  bool saw_ad = false, saw_acbd = false;
  for (const auto& e : v.ledger) {
    if (e.property == "1.2" && e.query.first == EndpointPair{cell.a(), cell.d()} && !e.query.second) {
      saw_ad = e.passed && !e.expect_good && e.paths.empty();
    }
    if (e.property == "1.4" && e.query.second && e.query.first == EndpointPair{cell.a(), cell.c()}) {
      saw_acbd = e.passed && !e.expect_good && e.paths.empty();
    }
  }
  CHECK(saw_ad);
  CHECK(saw_acbd);
}

TEST_CASE("relabelling group preserves suitability") {
  Cell cell = j18_cell();
  for (const auto& q : labelling_orbit(cell.outer())) CHECK(check_suitable(Cell(cell.graph(), q)).suitable);
  auto [a, b, c, d] = cell.outer();
  CHECK_FALSE(check_suitable(Cell(cell.graph(), {b, c, d, a})).suitable);

  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    Graph g = oracle::random_graph(rng, 7, 0.55);
    std::vector<int> vs = oracle::all_vertices(g);
    std::shuffle(vs.begin(), vs.end(), rng);
    std::array<int, 4> q{vs[0], vs[1], vs[2], vs[3]};
    bool base = check_suitable(Cell(g, q)).suitable;
    for (const auto& r : labelling_orbit(q)) CHECK(check_suitable(Cell(g, r)).suitable == base);
  }
}

TEST_CASE("cell preconditions and simple negatives") {
  CHECK_THROWS_AS(Cell(named::complete(4), {0, 1, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(Cell(named::complete(5), {0, 1, 1, 3}), PreconditionError);
  CHECK_THROWS_AS(Cell(named::complete(5), {0, 1, 2, 9}), PreconditionError);
  auto v = check_k2_cell(Cell(named::complete(5), {0, 1, 2, 3}));
  CHECK_FALSE(v.suitable);
  CHECK_FALSE(v.k1);
  CHECK_FALSE(v.k2);
  CHECK(find_cells(named::cycle(5)).empty());
}

TEST_CASE("K2-cells are suitable") {
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    Graph g = oracle::random_graph(rng, 7, 0.5);
    auto v = check_k2_cell(Cell(g, {0, 1, 2, 3}));
    if (v.k2) CHECK(v.suitable);
  }
}

TEST_CASE("find_cells on J18 contains the figure labelling") {
  auto raw = find_cells(named::j18(), {CellLevel::suitable, false, 1});
  CHECK(std::find(raw.begin(), raw.end(), named::kJ18Outer) != raw.end());
  auto dedup = find_cells(named::j18(), {CellLevel::k2, true, 2});
  bool hit = false;
  for (const auto& q : labelling_orbit(named::kJ18Outer)) hit = hit || std::find(dedup.begin(), dedup.end(), q) != dedup.end();
  CHECK(hit);
}

TEST_CASE("find_cells matches the property lists on every graph up to 7 vertices") {
  long cells_seen = 0;
  for (const Graph& g : oracle::read_corpus("graphs_upto7.g6")) {
    if (g.order() < 5) continue;
    BruteCell brute(g);
    std::vector<std::array<int, 4>> want_s, want_k1, want_k2;
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) {
        for (int c = 0; c < g.order(); ++c) {
          for (int d = 0; d < g.order(); ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            if (!brute.suitable(a, b, c, d)) continue;
            want_s.push_back({a, b, c, d});
            if (brute.k1(a, b, c, d)) want_k1.push_back({a, b, c, d});
            if (brute.k2(a, b, c, d)) want_k2.push_back({a, b, c, d});
          }
        }
      }
    }
    cells_seen += static_cast<long>(want_s.size());
    REQUIRE(find_cells(g, {CellLevel::suitable, false, 1}) == want_s);
    REQUIRE(find_cells(g, {CellLevel::k1, false, 1}) == want_k1);
    REQUIRE(find_cells(g, {CellLevel::k2, false, 1}) == want_k2);
    std::vector<std::array<int, 4>> minimal;
    for (const auto& q : want_s) {
      auto orbit = labelling_orbit(q);
      if (*std::min_element(orbit.begin(), orbit.end()) == q) minimal.push_back(q);
    }
    REQUIRE(find_cells(g, {CellLevel::suitable, true, 1}) == minimal);
  }
  // no graph this small is a suitable cell
  CHECK(cells_seen == 0);
}

TEST_CASE("every ledger answer matches the permutation oracle") {
  std::mt19937 rng(41);
  long compared = 0;
  for (const Graph& g : oracle::read_corpus("graphs_upto7.g6")) {
    if (g.order() < 6) continue;
    BruteCell brute(g);
    std::vector<int> vs = oracle::all_vertices(g);
    for (int round = 0; round < 2; ++round) {
      std::shuffle(vs.begin(), vs.end(), rng);
      Cell cell(g, {vs[0], vs[1], vs[2], vs[3]});
      auto [a, b, c, d] = cell.outer();
      auto v = check_k2_cell(cell);
      CHECK(v.suitable == brute.suitable(a, b, c, d));
      for (const auto& e : v.ledger) {
        bool good;
        if (e.query.first.first < 0) {
          REQUIRE_FALSE(e.trigger.empty());
          CHECK(e.passed == brute.rescued(e.trigger, a, b, c, d));
          continue;
        }
        auto [s, t] = e.query.first;
        if (e.query.second) {
          good = brute.good_pp(e.query.deleted, s, t, e.query.second->first, e.query.second->second);
        } else {
          good = brute.good(e.query.deleted, s, t);
        }
        CHECK(e.query.constraints.required.empty());
        CHECK(e.query.constraints.forbidden.empty());
        CHECK(good == !e.paths.empty());
        if (e.trigger.empty()) CHECK(e.passed == (good == e.expect_good));
        if (!e.paths.empty()) CHECK(replay(g, e.query, e.paths));
        ++compared;
      }
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("gamma construction") {
  std::vector<Cell> three(3, j18_cell());
  auto r = build_gamma(three, GammaVariant::k2);
  CHECK(r.graph.order() == 48);
  CHECK(r.to_global.size() == 3);
  for (int v = 0; v < 18; ++v) CHECK(r.to_global[0][v] == v);
  auto [a, b, c, d] = named::kJ18Outer;
  for (int i = 0; i < 3; ++i) {
    CHECK(r.to_global[i][b] == r.to_global[(i + 1) % 3][a]);
    CHECK(r.to_global[i][c] == r.to_global[(i + 1) % 3][d]);
  }
  CHECK_THROWS_AS(build_gamma({j18_cell(), j18_cell()}, GammaVariant::k2), PreconditionError);
  CHECK_THROWS_AS(build_gamma({Cell(named::complete(5), {0, 1, 2, 3}), j18_cell(), j18_cell()}, GammaVariant::k1),
                  PreconditionError);
  CHECK_NOTHROW(
      build_gamma({Cell(named::complete(5), {0, 1, 2, 3}), j18_cell(), j18_cell()}, GammaVariant::k1, false));
}

TEST_CASE("gamma over three J18 cells is hypohamiltonian and K2-hamiltonian") {
  PredicateOptions opts;
  opts.jobs = 2;
  auto r = build_gamma(std::vector<Cell>(3, j18_cell()), GammaVariant::k2, true, opts);
  CHECK_FALSE(hamiltonian_report(r.graph).verdict);
  CHECK(is_hypohamiltonian(r.graph, opts).verdict);
  CHECK(is_k2_hypohamiltonian(r.graph, opts).verdict);
  auto five = build_gamma(std::vector<Cell>(5, j18_cell()), GammaVariant::k1, true, opts);
  CHECK(five.graph.order() == 80);
}
