#include "k2ham/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "k2ham/error.hpp"

namespace k2ham {

Embedding Embedding::make(Graph g, std::vector<std::vector<int>> rotation) {
  const int n = g.order();
  if (static_cast<int>(rotation.size()) != n) {
    throw PreconditionError("rotation system has " + std::to_string(rotation.size()) +
                            " entries for " + std::to_string(n) + " vertices");
  }
  for (int v = 0; v < n; ++v) {
    VertexSet listed;
    for (int u : rotation[v]) {
      if (u < 0 || u >= n || !g.has_edge(v, u)) {
        throw PreconditionError("rotation at " + std::to_string(v) + " lists non-neighbour " +
                                std::to_string(u));
      }
      if (listed.contains(u)) {
        throw PreconditionError("rotation at " + std::to_string(v) + " repeats " + std::to_string(u));
      }
      listed.insert(u);
    }
    if (listed != g.neighbors(v)) {
      throw PreconditionError("rotation at " + std::to_string(v) + " misses a neighbour");
    }
  }
  Embedding e;
  e.graph_ = std::move(g);
  e.rotation_ = std::move(rotation);
  return e;
}

Embedding Embedding::from_coordinates(Graph g, std::span<const std::pair<double, double>> xy) {
  const int n = g.order();
  if (static_cast<int>(xy.size()) != n) throw PreconditionError("coordinate count mismatch");
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& r = rot[v];
    r = g.neighbors(v).to_vector();
    auto angle = [&](int u) { return std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first); };
    // Clockwise = decreasing angle.
    std::sort(r.begin(), r.end(), [&](int p, int q) { return angle(p) > angle(q); });
  }
  return make(std::move(g), std::move(rot));
}

int Embedding::position(int v, int u) const {
  const auto& r = rotation_[v];
  auto it = std::find(r.begin(), r.end(), u);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

Embedding Embedding::with_chord(int u, int u_after, int v, int v_after) const {
  int pu = position(u, u_after);
  int pv = position(v, v_after);
  if (pu < 0 || pv < 0) throw PreconditionError("chord corner does not exist in the rotation");
  auto rot = rotation_;
  rot[u].insert(rot[u].begin() + pu + 1, v);
  rot[v].insert(rot[v].begin() + pv + 1, u);
  return make(graph_.with_edge(u, v), std::move(rot));
}

}  // namespace k2ham
