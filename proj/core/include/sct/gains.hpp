#pragma once

#include <vector>

#include "sct/dual_graph.hpp"
#include "sct/permutation.hpp"

namespace sct {

// Gains on the dual graph: a permutation rho_e of {0..k-1} per directed edge
// with the reverse direction carrying the inverse.  A gain acts on a chamber
// colouring sigma (positions -> colours) on the right:
//
//   g_e(sigma) = sigma * rho_e
//
// so walking e1, e2, ..., em accumulates rho_{e1} * rho_{e2} * ... * rho_{em}
// (left-to-right in walk order; see Permutation for the * convention).
class GainAssignment {
 public:
  GainAssignment() = default;
  // identity gains on every edge
  GainAssignment(int edge_count, int k);

  int k() const { return k_; }
  int edge_count() const { return static_cast<int>(forward_.size()); }

  // gain for traversing edge e from e.s to e.t (forward) or back
  const Permutation& gain(int edge, bool forward) const {
    return forward ? forward_[edge] : reverse_[edge];
  }

  // sets the forward gain; the reverse direction becomes the inverse
  void set_gain(int edge, const Permutation& rho);

 private:
  int k_ = 0;
  std::vector<Permutation> forward_;
  std::vector<Permutation> reverse_;
};

// A walk in the dual graph: a start chamber and a sequence of edge indices.
// Each edge must touch the current chamber; traversal direction follows from
// that (loops cannot occur: a facet's two chambers are distinct).
struct Walk {
  int start = 0;
  std::vector<int> edges;
};

// Accumulated gain of the walk, validating connectivity (NotAWalk).
// Empty walks give the identity.
Permutation walk_gain(const DualGraph& g, const GainAssignment& gains,
                      const Walk& walk);

// True iff the closed walk has identity gain.  Throws NotClosed for open
// walks.  Computes both traversal directions and checks they agree on the
// verdict (they must: reversal inverts the gain).
bool is_balanced(const DualGraph& g, const GainAssignment& gains,
                 const Walk& walk);

Walk fcycle_walk(const FCycle& cycle);

// Spanning-tree propagation of chamber colourings: phi[root] = sigma0 and
// phi[t] = phi[s] * rho_{s->t} along tree edges (breadth-first from the root,
// neighbours in ascending chamber index, ties by edge index).  Every non-tree
// edge is then verified; a violated edge relation throws Unbalanced.  When it
// returns, phi satisfies phi[t] = phi[s] * rho_e for EVERY dual edge.
std::vector<Permutation> propagate(const DualGraph& g,
                                   const GainAssignment& gains, int root,
                                   const Permutation& sigma0);

}  // namespace sct
