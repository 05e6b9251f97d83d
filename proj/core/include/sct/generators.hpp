#pragma once

#include <cstdint>

#include "sct/triangulation.hpp"

namespace sct {

// Boundary of the (d+1)-simplex: all (d+1)-subsets of {0..d+1}, in
// lexicographic order.  d+2 chambers; the skeleton is K_{d+2}.
Triangulation simplex_boundary(int d);

// Boundary of the (d+1)-dimensional cross-polytope: vertices 2i and 2i+1 are
// the antipodal pair on axis i (i = 0..d); chambers pick one vertex per axis.
// 2^(d+1) chambers in lexicographic order; every (d-2)-cell has incidence 4.
// d = 2 gives the octahedron.
Triangulation cross_polytope_boundary(int d);

// Boundary of the cyclic 4-polytope on n >= 5 vertices (a 3-sphere): the
// chambers are the 4-subsets of {0..n-1} satisfying Gale's evenness
// condition (between any two non-members lies an even number of members).
// The skeleton is complete.  Throws TooFewVertices for n < 5.
Triangulation cyclic_polytope_boundary(int n);

// Double cone (suspension): two fresh apexes x = n and y = n+1, every
// chamber c becomes c+x and c+y (all x-chambers first, then all y-chambers,
// each block in input order).  Dimension rises by one; x and y are not
// adjacent, every other vertex is adjacent to both.
Triangulation double_cone(const Triangulation& t);

// Subdivision of every chamber.
Triangulation maximal_subdivision(const Triangulation& t);

// Subdivision of a uniformly random subset of chambers (each chamber chosen
// independently with probability 1/2 from a seeded Mersenne Twister).
// Deterministic for a fixed seed; used to fan out test instances.
Triangulation random_subdivision(const Triangulation& t, std::uint64_t seed);

}  // namespace sct
