#include "sct/gains.hpp"

#include <algorithm>
#include <set>

#include "sct/errors.hpp"

namespace sct {

GainAssignment::GainAssignment(int edge_count, int k)
    : k_(k),
      forward_(edge_count, Permutation::identity(k)),
      reverse_(edge_count, Permutation::identity(k)) {}

void GainAssignment::set_gain(int edge, const Permutation& rho) {
  if (rho.size() != k_)
    throw Error(ErrorCode::BadParams, "gain has wrong degree");
  forward_[edge] = rho;
  reverse_[edge] = rho.inverse();
}

namespace {

// resolves traversal directions; throws NotAWalk on a broken step
std::vector<bool> resolve_directions(const DualGraph& g, const Walk& walk) {
  if (walk.start < 0 || walk.start >= g.chamber_count)
    throw Error(ErrorCode::NotAWalk, "start chamber out of range");
  std::vector<bool> forward;
  forward.reserve(walk.edges.size());
  int cur = walk.start;
  for (int e : walk.edges) {
    if (e < 0 || e >= static_cast<int>(g.edges.size()))
      throw Error(ErrorCode::NotAWalk, "edge index out of range");
    const auto& edge = g.edges[e];
    if (edge.s == cur) {
      forward.push_back(true);
      cur = edge.t;
    } else if (edge.t == cur) {
      forward.push_back(false);
      cur = edge.s;
    } else {
      throw Error(ErrorCode::NotAWalk, "edge does not touch the current chamber");
    }
  }
  return forward;
}

int walk_end(const DualGraph& g, const Walk& walk) {
  int cur = walk.start;
  for (int e : walk.edges) {
    const auto& edge = g.edges[e];
    cur = (edge.s == cur) ? edge.t : edge.s;
  }
  return cur;
}

}  // namespace

Permutation walk_gain(const DualGraph& g, const GainAssignment& gains,
                      const Walk& walk) {
  auto forward = resolve_directions(g, walk);
  Permutation acc = Permutation::identity(gains.k());
  for (std::size_t i = 0; i < walk.edges.size(); ++i)
    acc = acc * gains.gain(walk.edges[i], forward[i]);
  return acc;
}

bool is_balanced(const DualGraph& g, const GainAssignment& gains,
                 const Walk& walk) {
  resolve_directions(g, walk);  // validates
  if (walk_end(g, walk) != walk.start)
    throw Error(ErrorCode::NotClosed, "balance is defined for closed walks");

  bool verdict = walk_gain(g, gains, walk).is_identity();

  // reversal must agree: the reversed walk's gain is the inverse
  Walk reversed;
  reversed.start = walk.start;
  reversed.edges.assign(walk.edges.rbegin(), walk.edges.rend());
  bool reversed_verdict = walk_gain(g, gains, reversed).is_identity();
  if (verdict != reversed_verdict)
    throw Error(ErrorCode::InternalInvariant,
                "balance verdict changed under reversal");
  return verdict;
}

Walk fcycle_walk(const FCycle& cycle) {
  Walk walk;
  walk.start = cycle.chambers.empty() ? 0 : cycle.chambers[0];
  walk.edges = cycle.edges;
  return walk;
}

std::vector<Permutation> propagate(const DualGraph& g,
                                   const GainAssignment& gains, int root,
                                   const Permutation& sigma0) {
  if (root < 0 || root >= g.chamber_count)
    throw Error(ErrorCode::BadParams, "root chamber out of range");
  if (sigma0.size() != gains.k())
    throw Error(ErrorCode::BadParams, "seed colouring has wrong degree");

  std::vector<Permutation> phi(g.chamber_count);
  std::vector<char> known(g.chamber_count, 0);
  phi[root] = sigma0;
  known[root] = 1;

  // grow the tree by repeatedly taking the smallest-index unreached chamber
  // adjacent to the reached set (ties between edges by edge index)
  for (int assigned = 1; assigned < g.chamber_count; ++assigned) {
    int best_chamber = -1, best_edge = -1, best_from = -1;
    for (int u = 0; u < g.chamber_count; ++u) {
      if (!known[u]) continue;
      for (int e : g.incident[u]) {
        const auto& edge = g.edges[e];
        int v = (edge.s == u) ? edge.t : edge.s;
        if (known[v]) continue;
        if (best_chamber == -1 || v < best_chamber ||
            (v == best_chamber && e < best_edge)) {
          best_chamber = v;
          best_edge = e;
          best_from = u;
        }
      }
    }
    if (best_chamber == -1)
      throw Error(ErrorCode::DisconnectedDual,
                  "propagation cannot reach every chamber");
    bool forward = g.edges[best_edge].s == best_from;
    phi[best_chamber] = phi[best_from] * gains.gain(best_edge, forward);
    known[best_chamber] = 1;
  }

  // every edge relation must hold, tree or not; one direction suffices since
  // the reverse gain is the inverse
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& edge = g.edges[e];
    if (!(phi[edge.t] == phi[edge.s] * gains.gain(e, true)))
      throw Error(ErrorCode::Unbalanced,
                  "gain relation violated on a non-tree dual edge");
  }
  return phi;
}

}  // namespace sct
