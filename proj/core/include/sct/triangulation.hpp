#pragma once

#include <map>
#include <vector>

#include "sct/cell.hpp"
#include "sct/graph.hpp"

namespace sct {

// Abstract triangulation of a d-sphere, d >= 2.  Chambers are the
// top-dimensional simplices, stored as sorted (d+1)-tuples of vertex ids in
// the compact range [0, n).  Chamber order is preserved from construction:
// chamber 0 anchors orientation and colour normalisation, so reordering
// chambers may flip global signs / rename colours but never changes answers.
//
// Validation performed by build_triangulation:
//   * every tuple has d+1 distinct non-negative vertices  (MalformedChamber)
//   * chambers are pairwise distinct                       (DuplicateChamber)
//   * every (d-1)-cell lies in exactly two chambers        (NotPseudomanifold)
//   * the facet-adjacency (dual) graph is connected        (DisconnectedDual)
//   * chambers around every (d-2)-cell form a single cycle (BadLink)
//
// These checks do NOT certify the sphere: orientability is checked separately
// by coherent_orientation, and beyond that being homeomorphic to S^d is
// assumed, not verified (sphere recognition is undecidable for d >= 5).
struct Triangulation {
  int dim = 0;            // d
  int num_vertices = 0;   // n, ids compacted to [0, n)
  std::vector<Cell> chambers;

  int chamber_count() const { return static_cast<int>(chambers.size()); }
};

// Validates, sorts each tuple, and compacts vertex ids to [0, n) preserving
// their relative order.  Accepts chambers with unsorted tuples.
Triangulation build_triangulation(int dim, std::vector<Cell> chambers);

// All k-cells of T, deduplicated, in lexicographic order.
// Throws DimensionOutOfRange unless 0 <= k <= d.
std::vector<Cell> cells(const Triangulation& t, int k);

// Number of (d-1)-cells containing the (d-2)-cell f (equivalently the length
// of the cycle of chambers around f).  Throws NotACell if f is not a
// (d-2)-cell of T.
int incidence_count(const Triangulation& t, const Cell& f);

// Incidence count of every (d-2)-cell, keyed by cell.
std::map<Cell, int> incidence_counts(const Triangulation& t);

// 1-skeleton as a simple graph on the vertex ids.
Graph skeleton(const Triangulation& t);

// Result of subdividing a set of chambers, with enough bookkeeping to carry
// orientations and colourings across the subdivision.
struct SubdivisionResult {
  Triangulation triangulation;
  // for each new-index chamber: the chamber of the input it came from
  std::vector<int> parent;
  // for children of a subdivided chamber: the position (in the parent's
  // sorted tuple) of the vertex the child omits; -1 for chambers kept as-is
  std::vector<int> omitted_position;
  // for each subdivided input chamber: the fresh vertex placed inside it
  std::map<int, int> new_vertex;
};

// Subdivide every chamber in S (indices into t.chambers): chamber c is
// replaced by the d+1 chambers (c minus one vertex) + fresh vertex.  Fresh
// vertices get ids n, n+1, ... in increasing order of subdivided chamber
// index.  Children replace their parent in place (facet positions ascending),
// so chamber order stays deterministic.  The result is re-validated.
SubdivisionResult subdivide_with_layout(const Triangulation& t,
                                        const std::vector<int>& s);

Triangulation subdivide(const Triangulation& t, const std::vector<int>& s);

}  // namespace sct
