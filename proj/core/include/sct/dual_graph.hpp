#pragma once

#include <vector>

#include "sct/cell.hpp"
#include "sct/triangulation.hpp"

namespace sct {

// Dual graph: one vertex per chamber, one edge per (d-1)-cell joining the two
// chambers that share it.  Stored as an explicit edge list so that parallel
// edges are representable (tests fabricate multigraphs directly; duals of
// abstract triangulations never need them since two distinct chambers share
// at most one facet).
struct DualGraph {
  struct Edge {
    int s = 0, t = 0;  // chamber indices, s < t
    Cell cell;         // the shared (d-1)-cell
  };

  int chamber_count = 0;
  std::vector<Edge> edges;                 // sorted by cell, lexicographically
  std::vector<std::vector<int>> incident;  // chamber -> incident edge indices

  void rebuild_incidence();
};

DualGraph dual_graph(const Triangulation& t);

// View of the dual graph as a simple Graph (parallel edges collapse).
Graph dual_as_graph(const DualGraph& g);

// The cyclic fan of chambers around a (d-2)-cell f: chambers[i] and
// chambers[(i+1) % len] share dual edge edges[i], whose cell contains f.
// Deterministic: starts at the smallest chamber index in the star and leaves
// it through the smaller-indexed of its two incident star edges.
struct FCycle {
  Cell f;
  std::vector<int> chambers;
  std::vector<int> edges;

  int length() const { return static_cast<int>(chambers.size()); }
};

// All f-cycles of T, ordered by f lexicographically.  Walk failures throw
// BadLink; build validation makes that unreachable, kept as defence.
std::vector<FCycle> f_cycles(const Triangulation& t, const DualGraph& g);

}  // namespace sct
