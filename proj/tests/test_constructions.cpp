#include <doctest.h>

#include "k2ham/error.hpp"
#include "k2ham/constructions.hpp"
#include "k2ham/named.hpp"
#include "k2ham/predicates.hpp"

using namespace k2ham;

namespace {

// Cycle of g - deleted, given in g's labels, obeying c.
bool cycle_after(const Graph& g, const std::vector<int>& deleted, const CycleWitness& cycle,
                 const SearchConstraints& c = {}) {
  VertexSet gone;
  for (int v : deleted) gone.insert(v);
  auto d = delete_vertices(g, gone);
  std::vector<int> local;
  for (int v : cycle) {
    if (v < 0 || v >= g.order() || d.from_original[v] < 0) return false;
    local.push_back(d.from_original[v]);
  }
  SearchConstraints lc;
  for (const Edge& e : c.required) lc.required.emplace_back(d.from_original[e.u], d.from_original[e.v]);
  for (const Edge& e : c.forbidden) {
    if (d.from_original[e.u] >= 0 && d.from_original[e.v] >= 0) {
      lc.forbidden.emplace_back(d.from_original[e.u], d.from_original[e.v]);
    }
  }
  return is_hamiltonian_cycle(d.graph, local, lc);
}

void replay_report(const Graph& g, const ConditionReport& r) {
  for (const auto& c : r.checks) {
    if (!c.passed) continue;
    if (c.cycle) {
      CHECK(cycle_after(g, c.query.deleted, *c.cycle, c.query.constraints));
    } else {
      CHECK(replay(g, c.query, c.paths));
    }
  }
}

}  // namespace

TEST_CASE("fragments") {
  Fragment p = fragment_from_cubic_vertex(named::petersen(), 0);
  CHECK(p.graph.order() == 9);
  CHECK_FALSE(p.trivial());
  for (int v : p.attachments) CHECK(p.graph.degree(v) == 2);
  Fragment t = trivial_fragment_at(named::star(3), 0);
  CHECK(t.trivial());
  Graph j = named::j18();
  int inner = -1;
  for (int v = 0; v < j.order() && inner < 0; ++v) {
    if (j.degree(v) == 3) inner = v;
  }
  CHECK(fragment_from_cubic_vertex(j, inner).graph.order() == 17);
  CHECK_THROWS_AS(fragment_from_cubic_vertex(named::complete(5), 0), PreconditionError);
  CHECK_THROWS_AS(Fragment(named::cycle(5), {0, 0, 1}), PreconditionError);
}

TEST_CASE("gluing two Petersen fragments gives a K2-hypohamiltonian graph on 15 vertices") {
  Graph p = named::petersen();
  Fragment first = fragment_from_cubic_vertex(p, 0);
  auto r = glue(first, fragment_from_cubic_vertex(p, 7));
  CHECK(r.graph.order() == 10 + 10 - 5);
  CHECK_FALSE(r.both_trivial);
  for (int v = 0; v < 15; ++v) {
    bool attachment = std::find(first.attachments.begin(), first.attachments.end(), v) != first.attachments.end();
    CHECK(r.graph.degree(v) == (attachment ? 4 : 3));
  }
  CHECK(is_hypohamiltonian(r.graph).verdict);
  CHECK(is_k2_hypohamiltonian(r.graph).verdict);
}

TEST_CASE("gluing to the trivial fragment restores the graph") {
  for (const char* name : {"petersen", "dodecahedron", "coxeter"}) {
    Graph g = named::by_name(name);
    const int v = 3;
    auto r = glue(fragment_from_cubic_vertex(g, v), trivial_fragment_at(named::star(3), 0));
    REQUIRE(r.graph.order() == g.order());
    auto d = delete_vertices(g, VertexSet{v});
    std::vector<int> relabel(g.order());
    for (int w = 0; w < g.order(); ++w) relabel[w] = w == v ? g.order() - 1 : d.from_original[w];
    for (const Edge& e : g.edges()) CHECK(r.graph.has_edge(relabel[e.u], relabel[e.v]));
    CHECK(r.graph.size() == g.size());
  }
}

TEST_CASE("both trivial fragments are flagged") {
  auto t = trivial_fragment_at(named::star(3), 0);
  CHECK(glue(t, t).both_trivial);
}

TEST_CASE("dot product of two Petersen graphs") {
  Graph p = named::petersen();
  DotSpec s = make_dot_spec(p, p, 0, 1, 2, 3, 0, 1);
  auto r = dot_product(p, p, s);
  CHECK(r.graph.order() == 18);
  CHECK(r.graph.is_cubic());
  auto snark = is_snark(r.graph);
  CHECK(snark.verdict);
  CHECK(snark.chromatic_class == 2);
  CHECK(snark.girth == 5);
  CHECK(snark.cyclically_4_edge_connected);
  CHECK(is_hypohamiltonian(r.graph).verdict);
  CHECK_FALSE(is_k2_hamiltonian(r.graph).verdict);
  CHECK(r.from_h[s.x] == -1);
  CHECK(r.from_h[s.y] == -1);
  CHECK(r.graph.has_edge(s.a, r.from_h[s.a2]));
  CHECK(r.graph.has_edge(s.d, r.from_h[s.d2]));
  CHECK_FALSE(r.graph.has_edge(s.a, s.b));
}

TEST_CASE("dot product order identity and degree preservation") {
  for (const char* gn : {"petersen", "flower:5", "dodecahedron", "coxeter"}) {
    for (const char* hn : {"petersen", "cube:3", "flower:7"}) {
      Graph g = named::by_name(gn);
      Graph h = named::by_name(hn);
      auto e = g.edges();
      const Edge ab = e[0];
      Edge cd;
      for (const Edge& f : e) {
        if (!f.has(ab.u) && !f.has(ab.v)) {
          cd = f;
          break;
        }
      }
      Edge xy;
      for (const Edge& f : h.edges()) {
        if ((h.neighbors(f.u) & h.neighbors(f.v)).empty()) {
          xy = f;
          break;
        }
      }
      auto r = dot_product(g, h, make_dot_spec(g, h, ab.u, ab.v, cd.u, cd.v, xy.u, xy.v));
      CHECK(r.graph.order() == g.order() + h.order() - 2);
      CHECK(r.graph.is_cubic());
    }
  }
}

TEST_CASE("dot product preconditions") {
  Graph p = named::petersen();
  CHECK_THROWS_AS(make_dot_spec(p, p, 0, 1, 1, 2, 0, 1), PreconditionError);
  CHECK_THROWS_AS(make_dot_spec(p, p, 0, 1, 2, 3, 0, 2), PreconditionError);
  CHECK_THROWS_AS(make_dot_spec(p, named::complete(4), 0, 1, 2, 3, 0, 1), PreconditionError);
  CHECK_THROWS_AS(make_dot_spec(p, p, 0, 1, 2, 3, 0, 1, std::array<int, 4>{4, 4, 2, 6}), PreconditionError);
  CHECK_THROWS_AS(check_dot_conditions_g(p, 0, 1, 4, 3), PreconditionError);
  auto q = named::hypercube(3);
  auto cube = check_dot_conditions_h(q, 0, 1);
  CHECK_FALSE(cube.holds("(iv)"));
  CHECK_FALSE(cube.passed);
}

TEST_CASE("flower snark J5 satisfies (i)-(vi) and J5.J5 is a K2-hypohamiltonian snark") {
  Graph j5 = named::flower_snark(5);
  PredicateOptions opts;
  opts.jobs = 2;
  auto labels = find_dot_labels_g(j5, 1, opts);
  REQUIRE(labels.size() == 1);
  auto [a, b, c, d] = labels[0];
  auto g_report = check_dot_conditions_g(j5, a, b, c, d, opts);
  CHECK(g_report.passed);
  CHECK(g_report.holds("(i)"));
  CHECK(g_report.holds("(ii)"));
  CHECK(g_report.holds("(iii)"));
  replay_report(j5, g_report);

  auto edges = find_dot_labels_h(j5, 1, opts);
  REQUIRE(edges.size() == 1);
  auto h_report = check_dot_conditions_h(j5, edges[0].u, edges[0].v, std::nullopt, opts);
  CHECK(h_report.passed);
  replay_report(j5, h_report);

  auto r = dot_product(j5, j5, make_dot_spec(j5, j5, a, b, c, d, edges[0].u, edges[0].v));
  CHECK(r.graph.order() == 38);
  CHECK(is_snark(r.graph).verdict);
  CHECK_FALSE(hamiltonian_report(r.graph).verdict);
  CHECK(is_k2_hypohamiltonian(r.graph, opts).verdict);

  CHECK(find_dot_labels_g(j5, 3, opts) == find_dot_labels_g(j5, 3, PredicateOptions{}));
}

TEST_CASE("Petersen has no labels satisfying (i)-(iii)") {
  CHECK(find_dot_labels_g(named::petersen()).empty());
}

TEST_CASE("iteration hypotheses on J5") {
  Graph j5 = named::flower_snark(5);
  auto labels = find_dot_labels_g(j5, 1);
  REQUIRE(!labels.empty());
  auto [a, b, c, d] = labels[0];
  auto edges = find_iterative_edges(j5, a, b, c, d, 1);
  REQUIRE(edges.size() == 1);
  const int xg = edges[0].u, yg = edges[0].v;
  auto bullets = check_iterative_bullets(j5, a, b, c, d, xg, yg);
  CHECK(bullets.passed);
  CHECK(bullets.holds("bullet 1"));
  CHECK(bullets.holds("bullet 2"));
  CHECK(bullets.holds("bullet 3"));
  replay_report(j5, bullets);

  CHECK_THROWS_AS(check_iterative_bullets(j5, a, b, c, d, a, b), PreconditionError);

  // the lemma's conclusion: x_G y_G satisfies (iv)-(vi) in G.H
  auto hx = find_dot_labels_h(j5, 1);
  REQUIRE(!hx.empty());
  auto product = dot_product(j5, j5, make_dot_spec(j5, j5, a, b, c, d, hx[0].u, hx[0].v));
  CHECK(check_dot_conditions_h(product.graph, xg, yg).passed);
}

TEST_CASE("iteration preconditions") {
  Graph w = named::wheel19();
  CHECK_THROWS_AS(check_iterative_bullets(w, 0, 1, 3, 4, 15, 16), PreconditionError);
}

TEST_CASE("extendable 5-cycles") {
  Graph gp = named::generalized_petersen(11, 2);
  auto found = find_extendable_5_cycles(gp);
  REQUIRE_FALSE(found.empty());
  for (const auto& c : found) {
    CHECK(c.cycle[0] == *std::min_element(c.cycle.begin(), c.cycle.end()));
    CHECK(c.cycle[1] < c.cycle[4]);
    REQUIRE(c.witnesses.size() == 10);
    for (const auto& w : c.witnesses) CHECK(cycle_after(gp, {w.deleted}, w.cycle, w.constraints));
    CHECK(check_extendable_5_cycle(gp, c.cycle).has_value());
  }
  CHECK(find_extendable_5_cycles(named::hypercube(3)).empty());
  CHECK_FALSE(check_extendable_5_cycle(gp, {0, 1, 2, 3, 4}).has_value());
  PredicateOptions tight;
  tight.search.node_limit = 1;
  CHECK_FALSE(check_extendable_5_cycle(gp, found[0].cycle, tight).has_value());
}
