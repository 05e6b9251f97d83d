#pragma once

#include <optional>
#include <vector>

#include "sct/gains.hpp"
#include "sct/graph.hpp"
#include "sct/orientation.hpp"
#include "sct/triangulation.hpp"

namespace sct {

// ---- combinatorial conditions on (d-2)-cell incidences ----

// Every (d-2)-cell has an even number of incident (d-1)-cells.  Equivalent to
// the dual graph being bipartite; both are computed and cross-checked (a
// disagreement throws InternalInvariant and means the input is not a sphere).
bool heawood_condition(const Triangulation& t);

// Every (d-2)-cell incidence is divisible by three.
bool div3_condition(const Triangulation& t);

// ---- gain constructions on the dual graph ----

// Gains with k = d+1 colours: crossing a facet sends the chamber colouring
// (s, pi_s) to the unique (t, pi_t) that agrees with it on the shared facet;
// the apex of t inherits the colour of the apex of s.
GainAssignment facet_agreement_gains(const Triangulation& t,
                                     const DualGraph& g);

// Gains with k = d+2 colours: agreement on the shared facet plus the twist
// pi_s(d+1) != pi_t(d+1) (slot d+1 holds the chamber's missing colour).  The
// apex of t takes s's missing colour; t's missing colour is s's apex colour.
GainAssignment missing_colour_swap_gains(const Triangulation& t,
                                         const DualGraph& g);

// Canonical local system of an existing proper k-colouring (k >= d+1):
// chamber colourings pi_t read off psi (free slots filled with the unused
// colours in increasing order) and rho_e = pi_s^{-1} * pi_t.  Facet agreement
// and balance of all f-cycles are asserted.  Throws NotProper /
// WrongColourCount.
GainAssignment canonical_local_from_colouring(const Triangulation& t,
                                              const DualGraph& g,
                                              const VertexColouring& psi);

// Fixed chamber colourings pi_t induced by a proper vertex colouring.
std::vector<Permutation> chamber_colourings_from_vertex(
    const Triangulation& t, const VertexColouring& psi);

// Vertex colouring read off per-chamber colourings; chambers must agree on
// shared vertices (InternalInvariant otherwise).
VertexColouring extract_vertex_colouring(const Triangulation& t,
                                         const std::vector<Permutation>& phi,
                                         int k);

// ---- colouring constructions ----

// Proper (d+1)-colouring of the skeleton, or nullopt when the even-incidence
// condition fails (in which case none exists).  Deterministic: gains are
// propagated from chamber 0 seeded with the identity.
std::optional<VertexColouring> colour_d_plus_1(const Triangulation& t);

// Proper (d+2)-colouring of the skeleton.  Precondition: div3_condition(t)
// (PreconditionViolated otherwise).  See colour_via_subdivision for inputs
// that do not satisfy it.
VertexColouring colour_d_plus_2(const Triangulation& t);

// General entry point for d+2 colours: find a subdividable set, colour the
// subdivision, restrict to the original vertices.  nullopt when no
// subdivision works (equivalently the skeleton is not (d+2)-colourable).
std::optional<VertexColouring> colour_via_subdivision(
    const Triangulation& t, int max_bruteforce_chambers = 20);

// ---- psi-orientations ----

enum class PsiMode { DPlus1, DPlus2 };

// Sign per chamber: (coherent orientation sign) x (parity of the permutation
// sending position i to the colour of the i-th smallest vertex; in DPlus2
// mode the chamber's missing colour occupies slot d+1).  Renaming two colours
// globally flips every sign, so only relative signs carry meaning.
struct PsiOrientation {
  int k = 0;
  std::vector<int> sign;
};

PsiOrientation psi_orientation(const Triangulation& t,
                               const VertexColouring& psi,
                               const OrientationAssignment& orient,
                               PsiMode mode);

// Chambers with negative psi-orientation under a proper (d+2)-colouring.
// Subdividing exactly these (giving each fresh vertex its chamber's missing
// colour) makes every chamber of the subdivision positive and every
// (d-2)-cell incidence divisible by three; both are asserted before return.
std::vector<int> subdivision_from_colouring(const Triangulation& t,
                                            const VertexColouring& psi,
                                            const OrientationAssignment& orient);

// Smallest (then lexicographically least) set S of chambers such that the
// subdivision at S satisfies div3_condition, or nullopt if none exists.
// Two independent routes: exhaustive subset search (when the chamber count
// is at most max_bruteforce_chambers) and the colouring construction above;
// when both run they must agree on existence (InternalInvariant otherwise).
// Beyond the bound only the colouring route runs and its witness (not
// necessarily minimal) is returned.
std::optional<std::vector<int>> find_subdivision(
    const Triangulation& t, int max_bruteforce_chambers = 20);

// Exhaustive route on its own (exposed for cross-checks): enumerates subsets
// by size then lexicographically, using the incidence arithmetic
//   new_incidence(f) = incidence(f) + #(chambers of S containing f)
// for original (d-2)-cells (cells created inside a subdivided chamber always
// have incidence exactly 3), with exact feasibility pruning.
std::optional<std::vector<int>> bruteforce_subdivision(const Triangulation& t);

}  // namespace sct
