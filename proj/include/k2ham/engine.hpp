#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "k2ham/graph.hpp"

namespace k2ham {

/// Edges every solution must contain / must avoid.
struct SearchConstraints {
  std::vector<Edge> required;
  std::vector<Edge> forbidden;
};

struct SearchOptions {
  /// Maximum number of node expansions; 0 means unlimited.  Hitting the limit
  /// gives SearchStatus::undecided, never a false "absent".
  std::uint64_t node_limit = 0;
};

enum class SearchStatus { found, absent, undecided };

/// Vertex sequence of a hamiltonian cycle.  Canonical orientation: the first
/// vertex is the smallest label, the second is its smaller cycle neighbour.
using CycleWitness = std::vector<int>;

/// Vertex sequence of a path, first element is the start vertex.
using PathWitness = std::vector<int>;

struct PathPair {
  PathWitness first;
  PathWitness second;
};

template <class W>
struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<W> witness;
  /// Constraints were unsatisfiable on their face (a vertex with three
  /// required edges, a required edge that is missing or also forbidden).
  bool contradictory = false;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
  bool undecided() const { return status == SearchStatus::undecided; }
};

struct CountResult {
  std::uint64_t count = 0;
  SearchStatus status = SearchStatus::absent;  ///< undecided if the limit was hit
  std::uint64_t nodes = 0;
};

/// Called with each hamiltonian cycle found (raw search order); return true to stop.
using CycleVisitor = std::function<bool(std::span<const int>)>;

/// Backtracking search: grows a path from a two-edge path centred at a
/// minimum-degree vertex and prunes when the first vertex has no unused
/// neighbour or an unused vertex has fewer than two non-interior neighbours.
/// Enumerates every hamiltonian cycle obeying `c` exactly once.
SearchStatus for_each_hamiltonian_cycle(const Graph& g, const SearchConstraints& c,
                                        const CycleVisitor& visit, const SearchOptions& opts = {});

SearchResult<CycleWitness> find_hamiltonian_cycle(const Graph& g, const SearchConstraints& c = {},
                                                  const SearchOptions& opts = {});

/// Number of hamiltonian cycles counted as undirected edge sets.
CountResult count_hamiltonian_cycles(const Graph& g, const SearchConstraints& c = {},
                                     const SearchOptions& opts = {});

/// Hamiltonian s-t path obeying `c`.  The witness starts at s and ends at t.
SearchResult<PathWitness> find_hamiltonian_path(const Graph& g, int s, int t,
                                                const SearchConstraints& c = {},
                                                const SearchOptions& opts = {});

/// Extra acceptance test for path pairs (e.g. "x on one path, y on the other").
using PathPairFilter = std::function<bool(const PathPair&)>;

/// Two vertex-disjoint paths, first from pair1.first to pair1.second and
/// second from pair2.first to pair2.second, covering V(g).  Throws
/// PreconditionError if the four endpoints are not pairwise distinct.
SearchResult<PathPair> find_disjoint_spanning_paths(const Graph& g, std::pair<int, int> pair1,
                                                    std::pair<int, int> pair2,
                                                    const SearchConstraints& c = {},
                                                    const SearchOptions& opts = {},
                                                    const PathPairFilter& accept = {});

// Pure witness checks; no search involved.

CycleWitness canonical_cycle(std::span<const int> cycle);

bool is_hamiltonian_cycle(const Graph& g, std::span<const int> cycle, const SearchConstraints& c = {});

/// Checks that `path` is a path of g from s to t whose vertices are exactly `cover`.
bool is_spanning_path(const Graph& g, std::span<const int> path, int s, int t, const VertexSet& cover,
                      const SearchConstraints& c = {});

bool is_hamiltonian_path(const Graph& g, std::span<const int> path, int s, int t,
                         const SearchConstraints& c = {});

bool is_disjoint_spanning_pair(const Graph& g, const PathPair& pp, std::pair<int, int> pair1,
                               std::pair<int, int> pair2, const SearchConstraints& c = {});

}  // namespace k2ham
