#pragma once

#include <optional>
#include <vector>

#include "k2ham/embedding.hpp"
#include "k2ham/engine.hpp"

namespace k2ham {

/// Faces of a connected plane embedding.
struct FaceSet {
  /// Boundary walks.  Face walks follow the rule: after the dart u->v comes
  /// v->w, where w follows u in the rotation at v.
  std::vector<std::vector<int>> walks;
  /// dart_face[u][i]: face to the side of the dart from u to rotation[u][i].
  std::vector<std::vector<int>> dart_face;

  int count() const { return static_cast<int>(walks.size()); }
  int size(int f) const { return static_cast<int>(walks[f].size()); }
  /// Face size mod 3.
  int residue(int f) const { return size(f) % 3; }
};

/// Throws PreconditionError if the graph is disconnected or V - E + F != 2
/// (the rotation system is not planar).
FaceSet faces(const Embedding& emb);

enum class Side { inside, outside };

struct GrinbergSum {
  long sigma = 0;
  /// The side assignment puts faces sharing a non-cycle edge on one side and
  /// faces sharing a cycle edge on opposite sides.
  bool consistent = false;
  std::vector<Side> sides;
};

/// Sum over faces of (size - 2) * (+1 inside, -1 outside).  Without `sides`
/// the assignment is derived from the cycle.  Throws PreconditionError if
/// `cycle` is not a hamiltonian cycle of the embedded graph.
GrinbergSum grinberg_sum(const Embedding& emb, const FaceSet& fs, const CycleWitness& cycle,
                         std::optional<std::vector<Side>> sides = std::nullopt);

/// Exactly one face has size - 2 not divisible by 3, so every Grinberg sum is
/// nonzero mod 3 and the graph cannot be hamiltonian.
bool grinbergian_obstruction(const FaceSet& fs);

/// Adds the edge uv across face f (both must lie on its boundary).
Embedding add_chord_in_face(const Embedding& emb, const FaceSet& fs, int f, int u, int v);

/// Index of a largest face (the first one on ties).
int largest_face(const FaceSet& fs);

}  // namespace k2ham
