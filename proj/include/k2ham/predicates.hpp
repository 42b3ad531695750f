#pragma once

#include <optional>
#include <vector>

#include "k2ham/engine.hpp"
#include "k2ham/graph.hpp"

namespace k2ham {

struct PredicateOptions {
  SearchOptions search;
  /// Worker threads for the per-deletion subchecks.  Results do not depend on it.
  int jobs = 1;
};

/// A hamiltonian cycle of g - deleted, written in g's labels.
struct DeletionWitness {
  std::vector<int> deleted;  ///< ascending
  CycleWitness cycle;
};

/// Outcome of a hamiltonicity-type predicate.
///
/// verdict true: `witnesses` holds one cycle per required deletion, in
/// ascending deletion order.  verdict false and !undecided: `counterexample`
/// names the first failing deletion (empty = g itself is hamiltonian, in
/// which case `counter_witness` holds its cycle).
struct PredicateReport {
  bool verdict = false;
  bool undecided = false;
  std::vector<DeletionWitness> witnesses;
  std::optional<std::vector<int>> counterexample;
  std::optional<CycleWitness> counter_witness;
};

PredicateReport hamiltonian_report(const Graph& g, const PredicateOptions& opts = {});

/// g - v hamiltonian for every v.  Requires n >= 4.
PredicateReport is_k1_hamiltonian(const Graph& g, const PredicateOptions& opts = {});

/// g - u - v hamiltonian for every edge uv.  Requires n >= 5.
PredicateReport is_k2_hamiltonian(const Graph& g, const PredicateOptions& opts = {});

/// Non-hamiltonian and K1-hamiltonian.  Requires n >= 5.
PredicateReport is_hypohamiltonian(const Graph& g, const PredicateOptions& opts = {});

/// Non-hamiltonian and K2-hamiltonian.  Requires n >= 5.
PredicateReport is_k2_hypohamiltonian(const Graph& g, const PredicateOptions& opts = {});

struct ExceptionalVertices {
  VertexSet vertices;
  /// Input outside the usual setting (hamiltonian or not 2-connected).
  bool warning = false;
  bool undecided = false;
};

/// {v : g - v is non-hamiltonian}.
ExceptionalVertices exceptional_vertices(const Graph& g, const PredicateOptions& opts = {});

/// Proper 3-edge-colouring of a cubic graph as one colour (0..2) per edge of
/// g.edges(), or nullopt if none exists.  Throws PreconditionError if g is not cubic.
std::optional<std::vector<int>> three_edge_coloring(const Graph& g);

/// 1 if g is 3-edge-colourable, otherwise 2.  Throws PreconditionError if g is not cubic.
int cubic_chromatic_class(const Graph& g);

/// No edge cut of at most three edges separates two parts that both contain
/// a cycle.  Throws PreconditionError if g is disconnected.
bool is_cyclically_4_edge_connected(const Graph& g);

struct SnarkReport {
  bool verdict = false;
  bool cubic = false;
  bool cyclically_4_edge_connected = false;
  int chromatic_class = 0;  ///< 0 when not cubic
  std::optional<int> girth;
};

/// Cubic, cyclically 4-edge-connected, chromatic index 4, girth >= 5.
SnarkReport is_snark(const Graph& g);

}  // namespace k2ham
