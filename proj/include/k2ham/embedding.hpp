#pragma once

#include <span>
#include <utility>
#include <vector>

#include "k2ham/graph.hpp"

namespace k2ham {

/// Rotation system: for every vertex, its neighbours in clockwise cyclic order.
///
/// Invariant (checked by make): rotation[v] lists N(v) exactly once each, so
/// u appears at v iff v appears at u.
class Embedding {
 public:
  /// Validates the rotation against the graph; throws PreconditionError.
  static Embedding make(Graph g, std::vector<std::vector<int>> rotation);

  /// Graph plus rotation read off a straight-line drawing (clockwise by angle).
  static Embedding from_coordinates(Graph g, std::span<const std::pair<double, double>> xy);

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }

  /// Position of u in the rotation at v; -1 if absent.
  int position(int v, int u) const;

  /// Adds edge uv inside the face corner at u that follows neighbour `u_after`
  /// and the corner at v that follows `v_after` (clockwise), i.e. the new
  /// neighbour is inserted right after the given one in each rotation.
  Embedding with_chord(int u, int u_after, int v, int v_after) const;

 private:
  Graph graph_;
  std::vector<std::vector<int>> rotation_;
};

}  // namespace k2ham
