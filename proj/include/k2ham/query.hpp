#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k2ham/engine.hpp"
#include "k2ham/graph.hpp"

namespace k2ham {

using EndpointPair = std::pair<int, int>;

/// "Is there a hamiltonian first-path (and, with `second`, a disjoint
/// second-path, the two together covering everything) in g minus `deleted`
/// obeying `constraints`?"  All labels are g's.
struct PairQuery {
  std::vector<int> deleted;
  EndpointPair first{-1, -1};
  std::optional<EndpointPair> second;
  SearchConstraints constraints;
};

inline PairQuery path_query(std::vector<int> deleted, EndpointPair p, SearchConstraints c = {}) {
  return {std::move(deleted), p, std::nullopt, std::move(c)};
}

inline PairQuery pair_query(std::vector<int> deleted, EndpointPair p1, EndpointPair p2, SearchConstraints c = {}) {
  return {std::move(deleted), p1, p2, std::move(c)};
}

struct PairAnswer {
  SearchStatus status = SearchStatus::absent;
  std::vector<PathWitness> paths;  ///< in g's labels; one or two paths when found
};

/// A query with a deleted endpoint, or a required edge touching a deleted
/// vertex, is answered absent.  `accept` filters path pairs (g's labels).
PairAnswer evaluate(const Graph& g, const PairQuery& q, const SearchOptions& opts = {},
                    const PathPairFilter& accept = {});

/// Hamiltonian cycle of g minus `deleted` obeying `c`, witness in g's labels.
SearchResult<CycleWitness> cycle_after_deleting(const Graph& g, const std::vector<int>& deleted,
                                                const SearchConstraints& c = {}, const SearchOptions& opts = {});

/// Pure check of a PairAnswer witness against its query.
bool replay(const Graph& g, const PairQuery& q, const std::vector<PathWitness>& paths);

}  // namespace k2ham
