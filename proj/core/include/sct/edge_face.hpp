#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sct/complex2.hpp"
#include "sct/graph.hpp"
#include "sct/orientation.hpp"
#include "sct/triangulation.hpp"

namespace sct {

// Largest complete graphs admitting an edge k-colouring with no
// monochromatic triangle (one below the triangle Ramsey numbers 6 and 17).
inline constexpr int kMonoFreeMaxOrder2 = 5;
inline constexpr int kMonoFreeMaxOrder3 = 16;

// Edge colouring keyed by sorted vertex pair, colours in {0..k-1}.
struct EdgeColouring {
  int k = 0;
  std::map<Cell, int> colour;
};

// Face colouring keyed by sorted vertex triple, colours in {0..4}.
struct FaceColouring {
  std::map<Cell, int> colour;
};

// Fixed witnesses: K_5 with 2 colours (pentagon cycle 0-1-..-4-0 coloured 0,
// pentagram diagonals coloured 1) and K_16 with 3 colours (vertices are the
// elements of GF(16); the colour of {u,v} is the discrete log of u xor v
// modulo 3, i.e. the cubic-residue class of the difference).  Neither has a
// monochromatic triangle.  Any other (n, k) throws UnsupportedSize.
EdgeColouring mono_free_colouring_K(int n, int k);

// Pulls the witness back along a proper vertex colouring: edge {u,v} of T
// receives the witness colour of {psi(u), psi(v)}.  Requires d = 3 and
// psi.k = 5 (k = 2) or 16 (k = 3).  No 2-cell of T ends up monochromatic
// (asserted; a monochromatic face would yield a monochromatic triangle in
// the witness).
EdgeColouring edge_colour_no_mono_faces(const Triangulation& t, int k,
                                        const VertexColouring& psi);

// 2-edge-colouring whose restriction to each chamber splits the 6 edges into
// two 3-edge paths, each visiting all 4 vertices (colour 0 is "red").
// Construction: 5-colour the skeleton (nullopt if impossible), extend to the
// maximal subdivision, pull back the K_5 witness there, restrict to T's
// edges.  The per-chamber path property is asserted on the result.
std::optional<EdgeColouring> derive_path_colouring(const Triangulation& t);

enum class ChamberParity { Even, Odd };

// A chamber is Even when walking its red path induces a positive orientation
// (path reversal is an even permutation on 4 vertices, so the class is
// well-defined; both directions are computed and must agree).  Throws
// NotAPathColouring if some chamber's red edges are not a spanning path.
std::vector<ChamberParity> classify_chambers(const Triangulation& t,
                                             const EdgeColouring& path_colouring,
                                             const OrientationAssignment& orient);

struct OddSubdivisionResult {
  Triangulation triangulation;
  EdgeColouring colouring;
  OrientationAssignment orientation;  // continues the input orientation
  std::vector<int> subdivided;        // the odd chambers, ascending
};

// Subdivides every Odd chamber and extends the 2-colouring: with red path
// v0-v1-v2-v3 and fresh vertex w, edges w-v0 and w-v3 become red, w-v1 and
// w-v2 blue.  Asserts that afterwards every chamber is Even (under the
// continued orientation) and every edge has face-incidence divisible by 3.
OddSubdivisionResult subdivide_odd(const Triangulation& t,
                                   const EdgeColouring& path_colouring,
                                   const OrientationAssignment& orient);

// 4-edge-colouring of a 2-complex with no monochromatic face, by removing
// the largest vertex, colouring the rest, and exactly 4-colouring the link
// graph of the removed vertex.  Throws LinkNotFourColourable when some link
// is not 4-colourable (cannot happen for subcomplexes of sphere
// triangulations, whose links are planar).
EdgeColouring four_edge_colour(const Complex2& c);

// Partition of the edges of K_m (m even) into m-1 perfect matchings, via the
// classic rotation: round r pairs vertex m-1 with r and (r+i) with (r-i)
// modulo m-1.  Throws OddOrder for odd or too-small m.
struct OneFactorization {
  int m = 0;
  std::vector<std::vector<std::pair<int, int>>> matchings;
};

OneFactorization one_factorization(int m);

// Edge colouring from a proper vertex colouring with an even number 2k of
// colours: edge {u,v} gets the index of the matching of K_2k containing
// {psi(u), psi(v)}.  Uses 2k-1 colours; within every 2-cell the three edge
// colours are pairwise distinct (asserted).  Throws OddColourCount for odd
// psi.k (pad by one colour first).
EdgeColouring proper_edge_colouring(const Triangulation& t,
                                    const VertexColouring& psi);

// Face colouring of a d=3 triangulation from a proper 5-colouring: the three
// vertex colours of a face leave a complementary colour pair, and the face
// is coloured by the index of the maximum matching of K_5 containing that
// pair (the matchings being the 1-factorization of K_6 with vertex 5
// deleted).  The four faces of every chamber get four distinct colours
// (asserted).
FaceColouring face_colouring_5(const Triangulation& t,
                               const VertexColouring& psi);

}  // namespace sct
