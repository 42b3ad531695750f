#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k2ham/graph.hpp"

namespace k2ham::named {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph prism();  ///< C3 x K2

/// Generalised Petersen graph GP(n, k): outer cycle u_i = i, spokes u_i v_i,
/// inner edges v_i v_{i+k} with v_i = n + i.  Requires n > 2k >= 2.
Graph generalized_petersen(int n, int k);

/// GP(5, 2).
Graph petersen();

/// GP(10, 2).
Graph dodecahedron();

/// Flower snark J_k for odd k >= 5.  Vertex groups a_i = i, b_i = k + i,
/// c_i = 2k + i, d_i = 3k + i; stars a_i{b_i, c_i, d_i}, the k-cycle on the
/// b_i and the 2k-cycle c_0 .. c_{k-1} d_0 .. d_{k-1}.
Graph flower_snark(int k);

/// d-dimensional hypercube; vertex labels are the bit vectors.
Graph hypercube(int d);

/// Coxeter graph: a_i adjacent to b_i, c_i, d_i; b_i ~ b_{i+1}, c_i ~ c_{i+2},
/// d_i ~ d_{i+3} (indices mod 7).
Graph coxeter();

/// J18: the dodecahedron minus two adjacent vertices, in the labelling of the
/// drawing used for the cell lemmas (figure label k is vertex k-1).
Graph j18();

/// Outer vertices (a, b, c, d) of the J18 cell, zero-based: figure labels 6, 9, 3, 1.
inline constexpr std::array<int, 4> kJ18Outer{5, 8, 2, 0};

/// Drawing coordinates of J18 (index = zero-based vertex).
std::vector<std::pair<double, double>> j18_coordinates();

/// Straight-line planar drawing coordinates of dodecahedron().
std::vector<std::pair<double, double>> dodecahedron_coordinates();

/// K4 with every vertex expanded into a triangle (truncated tetrahedron).
Graph triangle_replaced_k4();

/// 19-vertex graph: 15-cycle v_0..v_14 (labels 0..14), hub 15 adjacent to
/// s_0, s_1, s_2 (labels 16, 17, 18), and s_j adjacent to every v_i with i = j mod 3.
Graph wheel19();

/// Catalog lookup used by the CLI.  Accepts "name" or "name:p1[:p2]", e.g.
/// "petersen", "gp:11:2", "flower:5", "cube:3", "complete:4".
/// Throws PreconditionError for unknown names or bad parameters.
Graph by_name(std::string_view spec);

/// True if `spec` names a catalog entry (parameters are not validated).
bool is_catalog_name(std::string_view spec);

/// Names understood by by_name.
std::vector<std::string> catalog();

}  // namespace k2ham::named
