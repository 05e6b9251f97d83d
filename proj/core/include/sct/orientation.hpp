#pragma once

#include <vector>

#include "sct/triangulation.hpp"

namespace sct {

// Coherent orientation: sign per chamber (+1 means the sorted vertex tuple is
// a positive ordering) such that the two chambers of every (d-1)-cell induce
// opposite orientations on it.  Normalised so chamber 0 gets +1.
struct OrientationAssignment {
  std::vector<int> sign;
};

// Signs propagate across a shared facet by
//   sign[t] = -sign[s] * (-1)^(pos_s + pos_t)
// where pos_s is the position (in s's sorted tuple) of the vertex s does not
// share with t; this is the boundary-operator sign of the omitted position.
// Propagation runs over a spanning tree of the dual graph and every remaining
// facet is re-checked; a conflict means the complex is non-orientable
// (NonOrientable), e.g. a triangulated projective plane.
OrientationAssignment coherent_orientation(const Triangulation& t);

// True iff `orient` is coherent for t (every facet sees opposite induced
// orientations from its two chambers).
bool orientation_is_coherent(const Triangulation& t,
                             const OrientationAssignment& orient);

// Orientation of subdivide(t, s) that continues `orient` geometrically: kept
// chambers keep their sign; the child of chamber c omitting sorted position i
// gets sign[c] * (-1)^(d - i).  (Ordering the child as "facet then fresh
// vertex" orients it like the parent ordered as "facet then omitted vertex";
// moving the omitted vertex from position i to the end costs d-i swaps.)
OrientationAssignment extend_orientation(const Triangulation& t,
                                         const SubdivisionResult& layout,
                                         const OrientationAssignment& orient);

}  // namespace sct
