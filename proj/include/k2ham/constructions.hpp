#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k2ham/engine.hpp"
#include "k2ham/graph.hpp"
#include "k2ham/predicates.hpp"
#include "k2ham/query.hpp"

namespace k2ham {

/// A graph with an ordered triple of distinct attachment vertices.
struct Fragment {
  Graph graph;
  std::array<int, 3> attachments{};

  /// Throws PreconditionError unless the attachments are distinct and in range.
  Fragment(Graph g, std::array<int, 3> att);

  /// |X| + 1 vertices.
  bool trivial() const { return graph.order() == 4; }
};

/// g - v with attachments N(v) in ascending order (labels of g - v).
Fragment fragment_from_cubic_vertex(const Graph& g, int v);

/// g[N[v]] with attachments N(v) in ascending order: the trivial fragment at v.
Fragment trivial_fragment_at(const Graph& g, int v);

struct GlueResult {
  Graph graph;
  std::vector<int> from_first;   ///< vertex of the first fragment -> composite label
  std::vector<int> from_second;  ///< vertex of the second fragment -> composite label
  /// Both fragments trivial: hypohamiltonicity is not inherited.
  bool both_trivial = false;
};

/// Identifies the i-th attachments of both fragments.  The first fragment
/// keeps its labels; the remaining vertices of the second follow in
/// ascending order.  Edges present on both sides are merged.
GlueResult glue(const Fragment& first, const Fragment& second);

/// Edges ab, cd of G and adjacent cubic x, y of H.  a2, b2 are the
/// neighbours of x other than y (attached to a, b); c2, d2 those of y.
struct DotSpec {
  int a, b, c, d;
  int x, y;
  int a2, b2, c2, d2;
};

/// Validates the labels (ab, cd independent edges of g; xy an edge of h with
/// both ends cubic; both graphs on at least six vertices).  Without `primes`
/// the neighbours are taken in ascending order; given primes must match the
/// neighbourhoods.
DotSpec make_dot_spec(const Graph& g, const Graph& h, int a, int b, int c, int d, int x, int y,
                      std::optional<std::array<int, 4>> primes = std::nullopt);

struct DotResult {
  Graph graph;
  std::vector<int> from_g;  ///< identity on g's labels
  std::vector<int> from_h;  ///< -1 for x and y
};

/// (G - ab - cd) plus (H - x - y) plus the edges aa2, bb2, cc2, dd2.
/// Order |G| + |H| - 2.  The spec is revalidated.
DotResult dot_product(const Graph& g, const Graph& h, const DotSpec& spec);

/// One search behind a condition.  For cycle checks query.first is (-1, -1)
/// and the witness is in `cycle`; otherwise `paths` holds the path(s).
struct ConditionCheck {
  std::string condition;
  std::string detail;
  PairQuery query;
  bool passed = false;
  bool undecided = false;
  std::vector<PathWitness> paths;
  std::optional<CycleWitness> cycle;
};

struct ConditionReport {
  bool passed = false;
  bool undecided = false;
  std::vector<ConditionCheck> checks;

  /// All checks of one condition passed ("(i)", "bullet 2", ...).
  bool holds(const std::string& condition) const;
};

/// Conditions (i)-(iii) on G with edges ab, cd.  Throws PreconditionError
/// unless ab, cd are independent edges and a, b are not adjacent to c or d.
ConditionReport check_dot_conditions_g(const Graph& g, int a, int b, int c, int d,
                                       const PredicateOptions& opts = {});

/// Conditions (iv)-(vi) on H at the edge xy, with the neighbour labelling of
/// make_dot_spec.  Throws PreconditionError unless xy is an edge with cubic
/// ends and a2 b2, c2 d2 are non-adjacent.
ConditionReport check_dot_conditions_h(const Graph& h, int x, int y, std::optional<std::array<int, 4>> primes = {},
                                       const PredicateOptions& opts = {});

/// Unordered edge pairs {ab, cd} (a < b, c < d, ab before cd) satisfying
/// the side condition and (i)-(iii).  `limit` 0 means all.
std::vector<std::array<int, 4>> find_dot_labels_g(const Graph& g, std::size_t limit = 0,
                                                  const PredicateOptions& opts = {});

/// Edges xy (x < y) with cubic ends satisfying the side condition and (iv)-(vi).
std::vector<Edge> find_dot_labels_h(const Graph& h, std::size_t limit = 0, const PredicateOptions& opts = {});

/// The three hypotheses under which x_G, y_G of G become valid (iv)-(vi)
/// labels of G.H.  Throws PreconditionError unless x_G y_G is an edge with
/// cubic ends and N[x_G] u N[y_G] misses {a, b, c, d}.
ConditionReport check_iterative_bullets(const Graph& g, int a, int b, int c, int d, int xg, int yg,
                                        const PredicateOptions& opts = {});

/// Edges x_G y_G (x_G < y_G) meeting the preconditions and all three bullets.
std::vector<Edge> find_iterative_edges(const Graph& g, int a, int b, int c, int d, std::size_t limit = 0,
                                       const PredicateOptions& opts = {});

/// One of the ten searches certifying an extendable 5-cycle.
struct ExtensionWitness {
  int deleted = -1;
  SearchConstraints constraints;
  CycleWitness cycle;
};

struct ExtendableCycle {
  std::array<int, 5> cycle{};  ///< starts at its smallest vertex, then its smaller neighbour
  /// For i = 0..4: the search in g - v_i, then the one in g - v'_i.
  std::vector<ExtensionWitness> witnesses;
};

/// Every 5-cycle of cubic vertices that is extendable, in lexicographic order.
std::vector<ExtendableCycle> find_extendable_5_cycles(const Graph& g, const PredicateOptions& opts = {});

/// Checks one 5-cycle; nullopt if it is not a cubic 5-cycle or not extendable
/// (a search stopped by the node limit counts as a failure).
std::optional<ExtendableCycle> check_extendable_5_cycle(const Graph& g, const std::array<int, 5>& cycle,
                                                        const PredicateOptions& opts = {});

}  // namespace k2ham
