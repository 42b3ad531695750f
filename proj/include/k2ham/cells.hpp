#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k2ham/engine.hpp"
#include "k2ham/graph.hpp"
#include "k2ham/predicates.hpp"
#include "k2ham/query.hpp"

namespace k2ham {

/// A graph with four distinct distinguished (outer) vertices a, b, c, d.
class Cell {
 public:
  /// Throws PreconditionError unless the outer vertices are distinct, in
  /// range, and the graph has at least five vertices.
  Cell(Graph g, std::array<int, 4> outer);

  const Graph& graph() const { return graph_; }
  const std::array<int, 4>& outer() const { return outer_; }
  int a() const { return outer_[0]; }
  int b() const { return outer_[1]; }
  int c() const { return outer_[2]; }
  int d() const { return outer_[3]; }
  bool is_outer(int v) const;
  std::vector<int> inner() const;

 private:
  Graph graph_;
  std::array<int, 4> outer_;
};

bool good_pair(const Graph& g, int u, int v);
bool good_pair_of_pairs(const Graph& g, EndpointPair p1, EndpointPair p2);

/// One line of a cell verdict.  For the "some bad configuration becomes
/// good" properties (K1 and 2.1) `trigger` holds the deleted inner vertices
/// and `query` the configuration that became good; when none did,
/// query.first is (-1, -1).
struct PropertyCheck {
  std::string property;
  std::vector<int> trigger;
  PairQuery query;
  bool expect_good = true;
  bool passed = false;
  bool undecided = false;
  std::vector<PathWitness> paths;
};

struct CellVerdict {
  bool suitable = false;
  bool k1 = false;
  bool k2 = false;
  bool undecided = false;
  std::vector<PropertyCheck> ledger;
};

CellVerdict check_suitable(const Cell& cell, const PredicateOptions& opts = {});

/// Suitability first; the K1 part only runs on suitable cells.
CellVerdict check_k1_cell(const Cell& cell, const PredicateOptions& opts = {});
CellVerdict check_k2_cell(const Cell& cell, const PredicateOptions& opts = {});

/// Short human-readable form of a ledger entry, naming outer vertices by role.
std::string describe(const PropertyCheck& check, const Cell& cell);

enum class CellLevel { suitable, k1, k2 };

struct FindCellsOptions {
  CellLevel level = CellLevel::suitable;
  /// Report one labelling per orbit of the relabelling group
  /// {id, (d,c,b,a), (b,a,d,c), (c,d,a,b)} (the lexicographically smallest),
  /// or every labelling.
  bool dedup = true;
  int jobs = 1;
};

/// All outer labellings (a,b,c,d) making g a cell of the requested level,
/// in lexicographic order.  Requires n >= 5.
std::vector<std::array<int, 4>> find_cells(const Graph& g, const FindCellsOptions& opts = {});

/// Orbit of a labelling under the relabelling group, identity first.
std::array<std::array<int, 4>, 4> labelling_orbit(const std::array<int, 4>& q);

enum class GammaVariant { k1, k2 };

struct GammaResult {
  Graph graph;
  /// to_global[i][v]: label in the composite of vertex v of cell i.
  std::vector<std::vector<int>> to_global;
};

/// Cyclic identification b_i ~ a_{i+1}, c_i ~ d_{i+1} (indices mod k).  Cell
/// 0 keeps its labels; the new vertices of later cells follow in ascending
/// order.  Requires odd k >= 3 and, when `verify` is set, every cell passing
/// the variant's check.
GammaResult build_gamma(const std::vector<Cell>& cells, GammaVariant variant, bool verify = true,
                        const PredicateOptions& opts = {});

}  // namespace k2ham
