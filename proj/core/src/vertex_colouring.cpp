#include "sct/vertex_colouring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sct/errors.hpp"

namespace sct {

namespace {

bool all_incidences(const Triangulation& t, auto&& predicate) {
  for (const auto& [f, count] : incidence_counts(t))
    if (!predicate(count)) return false;
  return true;
}

// positions in s and t of the vertex each does not share with the other
struct ApexPositions {
  int a;  // in s
  int b;  // in t
};

ApexPositions apex_positions(const Cell& s, const Cell& t, const Cell& shared) {
  ApexPositions out{-1, -1};
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (position_of(shared, s[i]) < 0) out.a = i;
  for (int j = 0; j < static_cast<int>(t.size()); ++j)
    if (position_of(shared, t[j]) < 0) out.b = j;
  if (out.a < 0 || out.b < 0)
    throw Error(ErrorCode::InternalInvariant, "facet not contained in chamber");
  return out;
}

void check_colouring_shape(const Triangulation& t, const VertexColouring& psi) {
  if (static_cast<int>(psi.colours.size()) != t.num_vertices)
    throw Error(ErrorCode::WrongColourCount,
                "colouring does not cover the vertex set");
  for (int c : psi.colours)
    if (c < 0 || c >= psi.k)
      throw Error(ErrorCode::WrongColourCount, "colour out of range");
}

// proper on the skeleton == all vertices of every chamber coloured distinctly
void check_proper_on_chambers(const Triangulation& t,
                              const VertexColouring& psi) {
  for (const Cell& c : t.chambers) {
    std::set<int> used;
    for (int v : c)
      if (!used.insert(psi.colours[v]).second)
        throw Error(ErrorCode::NotProper,
                    "two vertices of one chamber share a colour");
  }
}

}  // namespace

bool heawood_condition(const Triangulation& t) {
  bool even = all_incidences(t, [](int c) { return c % 2 == 0; });
  bool bipartite = is_bipartite(dual_as_graph(dual_graph(t)));
  if (even != bipartite)
    throw Error(ErrorCode::InternalInvariant,
                "even-incidence and dual-bipartiteness disagree; the complex "
                "cannot be a sphere");
  return even;
}

bool div3_condition(const Triangulation& t) {
  return all_incidences(t, [](int c) { return c % 3 == 0; });
}

GainAssignment facet_agreement_gains(const Triangulation& t,
                                     const DualGraph& g) {
  const int k = t.dim + 1;
  GainAssignment gains(static_cast<int>(g.edges.size()), k);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const Cell& s = t.chambers[g.edges[e].s];
    const Cell& tc = t.chambers[g.edges[e].t];
    auto [a, b] = apex_positions(s, tc, g.edges[e].cell);
    std::vector<int> img(k);
    for (int j = 0; j < k; ++j)
      img[j] = (j == b) ? a : position_of(s, tc[j]);
    gains.set_gain(e, Permutation(std::move(img)));
  }
  return gains;
}

GainAssignment missing_colour_swap_gains(const Triangulation& t,
                                         const DualGraph& g) {
  const int k = t.dim + 2;
  GainAssignment gains(static_cast<int>(g.edges.size()), k);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const Cell& s = t.chambers[g.edges[e].s];
    const Cell& tc = t.chambers[g.edges[e].t];
    auto [a, b] = apex_positions(s, tc, g.edges[e].cell);
    std::vector<int> img(k);
    for (int j = 0; j <= t.dim; ++j)
      img[j] = (j == b) ? k - 1 : position_of(s, tc[j]);
    img[k - 1] = a;  // t misses what s carried on its apex
    gains.set_gain(e, Permutation(std::move(img)));
  }
  return gains;
}

std::vector<Permutation> chamber_colourings_from_vertex(
    const Triangulation& t, const VertexColouring& psi) {
  check_colouring_shape(t, psi);
  check_proper_on_chambers(t, psi);
  if (psi.k < t.dim + 1)
    throw Error(ErrorCode::WrongColourCount,
                "need at least d+1 colours for chamber colourings");
  std::vector<Permutation> out;
  out.reserve(t.chambers.size());
  for (const Cell& c : t.chambers) {
    std::vector<int> img;
    img.reserve(psi.k);
    std::set<int> used;
    for (int v : c) {
      img.push_back(psi.colours[v]);
      used.insert(psi.colours[v]);
    }
    for (int colour = 0; colour < psi.k; ++colour)  // free slots, ascending
      if (!used.count(colour)) img.push_back(colour);
    out.emplace_back(std::move(img));
  }
  return out;
}

VertexColouring extract_vertex_colouring(const Triangulation& t,
                                         const std::vector<Permutation>& phi,
                                         int k) {
  VertexColouring psi;
  psi.k = k;
  psi.colours.assign(t.num_vertices, -1);
  for (int i = 0; i < t.chamber_count(); ++i) {
    const Cell& c = t.chambers[i];
    for (int pos = 0; pos < static_cast<int>(c.size()); ++pos) {
      int colour = phi[i](pos);
      if (psi.colours[c[pos]] == -1) {
        psi.colours[c[pos]] = colour;
      } else if (psi.colours[c[pos]] != colour) {
        throw Error(ErrorCode::InternalInvariant,
                    "chambers disagree on a vertex colour");
      }
    }
  }
  return psi;
}

GainAssignment canonical_local_from_colouring(const Triangulation& t,
                                              const DualGraph& g,
                                              const VertexColouring& psi) {
  auto pi = chamber_colourings_from_vertex(t, psi);
  GainAssignment gains(static_cast<int>(g.edges.size()), psi.k);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const auto& edge = g.edges[e];
    Permutation rho = pi[edge.s].inverse() * pi[edge.t];
    // facet agreement is automatic but cheap to assert
    const Cell& s = t.chambers[edge.s];
    const Cell& tc = t.chambers[edge.t];
    for (int u : edge.cell)
      if (rho(position_of(tc, u)) != position_of(s, u))
        throw Error(ErrorCode::InternalInvariant,
                    "canonical gain breaks facet agreement");
    gains.set_gain(e, rho);
  }
  for (const FCycle& cycle : f_cycles(t, g))
    if (!is_balanced(g, gains, fcycle_walk(cycle)))
      throw Error(ErrorCode::InternalInvariant,
                  "canonical local system has an unbalanced f-cycle");
  return gains;
}

namespace {

// shared tail of the two construction pipelines: check balance on every
// f-cycle, then propagate from chamber 0 with the identity
std::vector<Permutation> balanced_propagation(const Triangulation& t,
                                              const DualGraph& g,
                                              const GainAssignment& gains) {
  for (const FCycle& cycle : f_cycles(t, g))
    if (!is_balanced(g, gains, fcycle_walk(cycle)))
      throw Error(ErrorCode::InternalUnbalanced,
                  "an f-cycle is unbalanced although the incidence "
                  "condition holds");
  try {
    return propagate(g, gains, 0, Permutation::identity(gains.k()));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::Unbalanced)
      throw Error(ErrorCode::InternalUnbalanced,
                  "propagation conflict although every f-cycle is balanced; "
                  "the complex cannot be a sphere");
    throw;
  }
}

}  // namespace

std::optional<VertexColouring> colour_d_plus_1(const Triangulation& t) {
  if (!heawood_condition(t)) return std::nullopt;
  auto g = dual_graph(t);
  auto phi = balanced_propagation(t, g, facet_agreement_gains(t, g));
  return extract_vertex_colouring(t, phi, t.dim + 1);
}

VertexColouring colour_d_plus_2(const Triangulation& t) {
  if (!div3_condition(t))
    throw Error(ErrorCode::PreconditionViolated,
                "a (d-2)-cell incidence is not divisible by three");
  auto g = dual_graph(t);
  auto phi = balanced_propagation(t, g, missing_colour_swap_gains(t, g));
  return extract_vertex_colouring(t, phi, t.dim + 2);
}

PsiOrientation psi_orientation(const Triangulation& t,
                               const VertexColouring& psi,
                               const OrientationAssignment& orient,
                               PsiMode mode) {
  const int expected_k = t.dim + (mode == PsiMode::DPlus1 ? 1 : 2);
  if (psi.k != expected_k)
    throw Error(ErrorCode::WrongColourCount,
                "mode expects k = " + std::to_string(expected_k));
  check_colouring_shape(t, psi);
  check_proper_on_chambers(t, psi);
  if (static_cast<int>(orient.sign.size()) != t.chamber_count())
    throw Error(ErrorCode::BadParams, "orientation does not match complex");

  PsiOrientation out;
  out.k = psi.k;
  out.sign.reserve(t.chambers.size());
  for (int i = 0; i < t.chamber_count(); ++i) {
    std::vector<int> img;
    img.reserve(psi.k);
    for (int v : t.chambers[i]) img.push_back(psi.colours[v]);
    if (mode == PsiMode::DPlus2) {
      int missing = (psi.k * (psi.k - 1)) / 2;  // sum of all colours
      for (int c : img) missing -= c;
      img.push_back(missing);
    }
    out.sign.push_back(orient.sign[i] * Permutation(std::move(img)).parity());
  }
  return out;
}

std::vector<int> subdivision_from_colouring(const Triangulation& t,
                                            const VertexColouring& psi,
                                            const OrientationAssignment& orient) {
  auto po = psi_orientation(t, psi, orient, PsiMode::DPlus2);
  std::vector<int> negatives;
  for (int i = 0; i < t.chamber_count(); ++i)
    if (po.sign[i] < 0) negatives.push_back(i);

  // the defining property of the negative class: subdividing it yields an
  // all-positive, divisible-by-three complex; assert both
  auto layout = subdivide_with_layout(t, negatives);
  VertexColouring extended;
  extended.k = psi.k;
  extended.colours = psi.colours;
  extended.colours.resize(layout.triangulation.num_vertices, -1);
  for (const auto& [chamber, w] : layout.new_vertex) {
    int missing = (psi.k * (psi.k - 1)) / 2;
    for (int v : t.chambers[chamber]) missing -= psi.colours[v];
    extended.colours[w] = missing;
  }
  auto extended_orient = extend_orientation(t, layout, orient);
  auto po2 = psi_orientation(layout.triangulation, extended, extended_orient,
                             PsiMode::DPlus2);
  for (int sign : po2.sign)
    if (sign != +1)
      throw Error(ErrorCode::InternalInvariant,
                  "subdividing the negative class left a negative chamber");
  if (!div3_condition(layout.triangulation))
    throw Error(ErrorCode::InternalInvariant,
                "subdividing the negative class broke the mod-3 condition");
  return negatives;
}

std::optional<std::vector<int>> bruteforce_subdivision(const Triangulation& t) {
  // index the (d-2)-cells; for each, its incidence and the chambers around it
  std::vector<int> residue;                   // incidence mod 3
  std::vector<std::vector<int>> star;         // sorted chamber indices
  {
    std::map<Cell, int> cell_index;
    for (int i = 0; i < t.chamber_count(); ++i) {
      for (const Cell& f : subsets_of_size(t.chambers[i], t.dim - 1)) {
        auto [it, fresh] = cell_index.try_emplace(
            f, static_cast<int>(cell_index.size()));
        if (fresh) {
          residue.push_back(0);
          star.emplace_back();
        }
        star[it->second].push_back(i);
      }
    }
    for (std::size_t f = 0; f < star.size(); ++f)
      residue[f] = static_cast<int>(star[f].size()) % 3;
  }
  const int cell_count = static_cast<int>(star.size());
  const int m = t.chamber_count();

  // chamber -> cells it contains (by cell index)
  std::vector<std::vector<int>> cells_of(m);
  for (int f = 0; f < cell_count; ++f)
    for (int chamber : star[f]) cells_of[chamber].push_back(f);

  std::vector<int> count(cell_count, 0);  // chosen chambers around each cell
  std::vector<int> chosen;

  // Exact feasibility test at a search node: cell f can still be fixed iff
  // the deficit (3 - (residue+count)) mod 3 fits into what remains, i.e. at
  // most min(picks left, star chambers at index >= next).
  auto feasible = [&](int next, int remaining) {
    for (int f = 0; f < cell_count; ++f) {
      int deficit = (3 - (residue[f] + count[f]) % 3) % 3;
      if (deficit == 0) continue;
      auto from =
          std::lower_bound(star[f].begin(), star[f].end(), next);
      int available = static_cast<int>(star[f].end() - from);
      if (deficit > std::min(remaining, available)) return false;
    }
    return true;
  };

  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int next, int remaining) -> bool {
    if (!feasible(next, remaining)) return false;
    if (remaining == 0) {
      found = chosen;
      return true;
    }
    for (int i = next; i + remaining <= m; ++i) {
      for (int f : cells_of[i]) ++count[f];
      chosen.push_back(i);
      if (self(self, i + 1, remaining - 1)) return true;
      chosen.pop_back();
      for (int f : cells_of[i]) --count[f];
    }
    return false;
  };

  for (int size = 0; size <= m; ++size)
    if (rec(rec, 0, size)) return found;
  return std::nullopt;
}

std::optional<std::vector<int>> find_subdivision(const Triangulation& t,
                                                 int max_bruteforce_chambers) {
  std::optional<std::vector<int>> via_colouring;
  auto psi = exact_graph_colouring(skeleton(t), t.dim + 2);
  if (psi)
    via_colouring =
        subdivision_from_colouring(t, *psi, coherent_orientation(t));

  if (t.chamber_count() > max_bruteforce_chambers) return via_colouring;

  auto via_search = bruteforce_subdivision(t);
  if (via_search.has_value() != via_colouring.has_value())
    throw Error(ErrorCode::InternalInvariant,
                "exhaustive search and colouring construction disagree on "
                "subdividability");
  if (via_search && !div3_condition(subdivide(t, *via_search)))
    throw Error(ErrorCode::InternalInvariant,
                "search returned a subset whose subdivision fails mod 3");
  return via_search;
}

std::optional<VertexColouring> colour_via_subdivision(
    const Triangulation& t, int max_bruteforce_chambers) {
  auto s = find_subdivision(t, max_bruteforce_chambers);
  if (!s) return std::nullopt;
  Triangulation subdivided = subdivide(t, *s);
  VertexColouring full = colour_d_plus_2(subdivided);
  // fresh vertices have the largest ids; the originals keep theirs
  full.colours.resize(t.num_vertices);
  return full;
}

}  // namespace sct
