#include "k2ham/grinberg.hpp"

#include <algorithm>
#include <cassert>

#include "k2ham/error.hpp"

namespace k2ham {

FaceSet faces(const Embedding& emb) {
  const Graph& g = emb.graph();
  if (!g.is_connected()) throw PreconditionError("face traversal needs a connected graph");
  const auto& rot = emb.rotation();
  const int n = g.order();
  FaceSet fs;
  fs.dart_face.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) fs.dart_face[v].assign(rot[v].size(), -1);
  int darts = 0;
  for (int u0 = 0; u0 < n; ++u0) {
    for (std::size_t i0 = 0; i0 < rot[u0].size(); ++i0) {
      if (fs.dart_face[u0][i0] >= 0) continue;
      const int f = fs.count();
      std::vector<int> walk;
      int u = u0;
      int i = static_cast<int>(i0);
      while (fs.dart_face[u][i] < 0) {
        fs.dart_face[u][i] = f;
        walk.push_back(u);
        ++darts;
        int v = rot[u][i];
        int back = emb.position(v, u);
        int next = (back + 1) % static_cast<int>(rot[v].size());
        u = v;
        i = next;
      }
      // a face walk must close on the dart it started from
      if (u != u0 || i != static_cast<int>(i0)) throw PreconditionError("inconsistent rotation system");
      fs.walks.push_back(std::move(walk));
    }
  }
  assert(darts == 2 * g.size());
  if (n - g.size() + fs.count() != 2) {
    throw PreconditionError("rotation system violates Euler's formula (V - E + F = " +
                            std::to_string(n - g.size() + fs.count()) + ")");
  }
  return fs;
}

namespace {

int face_of(const Embedding& emb, const FaceSet& fs, int u, int v) { return fs.dart_face[u][emb.position(u, v)]; }

}  // namespace

GrinbergSum grinberg_sum(const Embedding& emb, const FaceSet& fs, const CycleWitness& cycle,
                         std::optional<std::vector<Side>> sides) {
  const Graph& g = emb.graph();
  if (!is_hamiltonian_cycle(g, cycle)) throw PreconditionError("not a hamiltonian cycle of the embedded graph");
  const int n = g.order();
  std::vector<Edge> on_cycle;
  for (int i = 0; i < n; ++i) on_cycle.emplace_back(cycle[i], cycle[(i + 1) % n]);
  std::sort(on_cycle.begin(), on_cycle.end());
  auto is_cycle_edge = [&](const Edge& e) { return std::binary_search(on_cycle.begin(), on_cycle.end(), e); };

  // Face adjacency: same side across chords, opposite sides across the cycle.
  struct Link {
    int f1, f2;
    bool opposite;
  };
  std::vector<Link> links;
  for (const Edge& e : g.edges()) links.push_back({face_of(emb, fs, e.u, e.v), face_of(emb, fs, e.v, e.u), is_cycle_edge(e)});

  GrinbergSum res;
  if (sides) {
    if (static_cast<int>(sides->size()) != fs.count()) throw PreconditionError("one side per face is required");
    res.sides = *sides;
  } else {
    std::vector<int> colour(static_cast<std::size_t>(fs.count()), -1);
    std::vector<int> stack;
    for (int s = 0; s < fs.count(); ++s) {
      if (colour[s] >= 0) continue;
      colour[s] = 0;
      stack.push_back(s);
      while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (const Link& l : links) {
          int other = l.f1 == f ? l.f2 : (l.f2 == f ? l.f1 : -1);
          if (other < 0 || colour[other] >= 0) continue;
          colour[other] = colour[f] ^ (l.opposite ? 1 : 0);
          stack.push_back(other);
        }
      }
    }
    for (int c : colour) res.sides.push_back(c == 0 ? Side::inside : Side::outside);
  }
  res.consistent = true;
  for (const Link& l : links) {
    bool differ = res.sides[l.f1] != res.sides[l.f2];
    if (differ != l.opposite) res.consistent = false;
  }
  for (int f = 0; f < fs.count(); ++f) {
    long term = fs.size(f) - 2;
    res.sigma += res.sides[f] == Side::inside ? term : -term;
  }
  return res;
}

bool grinbergian_obstruction(const FaceSet& fs) {
  int odd = 0;
  for (int f = 0; f < fs.count(); ++f) {
    if ((fs.size(f) - 2) % 3 != 0) ++odd;
  }
  return odd == 1;
}

Embedding add_chord_in_face(const Embedding& emb, const FaceSet& fs, int f, int u, int v) {
  const auto& walk = fs.walks.at(static_cast<std::size_t>(f));
  const int len = static_cast<int>(walk.size());
  // The corner of f at w sits after the walk's previous vertex in w's rotation.
  auto corner = [&](int w) {
    for (int i = 0; i < len; ++i) {
      if (walk[i] == w) return walk[(i + len - 1) % len];
    }
    throw PreconditionError("vertex " + std::to_string(w) + " is not on the face");
  };
  return emb.with_chord(u, corner(u), v, corner(v));
}

int largest_face(const FaceSet& fs) {
  int best = 0;
  for (int f = 1; f < fs.count(); ++f) {
    if (fs.size(f) > fs.size(best)) best = f;
  }
  return best;
}

}  // namespace k2ham
