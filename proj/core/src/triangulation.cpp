#include "sct/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sct/errors.hpp"

namespace sct {

namespace {

// facet -> indices of the chambers containing it
std::map<Cell, std::vector<int>> facet_stars(const Triangulation& t) {
  std::map<Cell, std::vector<int>> stars;
  for (int i = 0; i < t.chamber_count(); ++i)
    for (int pos = 0; pos <= t.dim; ++pos)
      stars[facet_omitting(t.chambers[i], pos)].push_back(i);
  return stars;
}

void check_pseudomanifold(const std::map<Cell, std::vector<int>>& stars) {
  for (const auto& [facet, star] : stars) {
    if (star.size() != 2)
      throw Error(ErrorCode::NotPseudomanifold,
                  "a (d-1)-cell lies in " + std::to_string(star.size()) +
                      " chambers instead of 2");
  }
}

void check_dual_connected(const Triangulation& t,
                          const std::map<Cell, std::vector<int>>& stars) {
  if (t.chamber_count() == 0)
    throw Error(ErrorCode::MalformedComplex, "no chambers");
  std::vector<std::vector<int>> adj(t.chamber_count());
  for (const auto& [facet, star] : stars) {
    adj[star[0]].push_back(star[1]);
    adj[star[1]].push_back(star[0]);
  }
  std::vector<char> seen(t.chamber_count(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  if (reached != t.chamber_count())
    throw Error(ErrorCode::DisconnectedDual, "dual graph is not connected");
}

// Chambers around each (d-2)-cell must form one cycle under facet adjacency.
void check_links(const Triangulation& t,
                 const std::map<Cell, std::vector<int>>& stars) {
  std::map<Cell, std::vector<int>> ridge_stars;
  for (int i = 0; i < t.chamber_count(); ++i)
    for (const Cell& f : subsets_of_size(t.chambers[i], t.dim - 1))
      ridge_stars[f].push_back(i);

  for (const auto& [f, star] : ridge_stars) {
    // within the star of f every chamber touches exactly two facets
    // containing f, so the star decomposes into cycles; demand exactly one
    if (star.size() < 3)
      throw Error(ErrorCode::BadLink, "cycle around a (d-2)-cell shorter than 3");
    int start = star[0];
    int prev = -1;
    int cur = start;
    std::size_t steps = 0;
    do {
      int next = -1;
      for (int v : t.chambers[cur]) {
        if (position_of(f, v) >= 0) continue;  // v in f: facet would drop f
        Cell facet = f;
        facet.insert(std::lower_bound(facet.begin(), facet.end(), v), v);
        // facet = f + v is a (d-1)-cell of cur; its other chamber also holds f
        const auto& pair = stars.at(facet);
        int other = pair[0] == cur ? pair[1] : pair[0];
        if (other != prev) {
          next = other;
          break;
        }
        // both neighbours equal prev only on a 2-cycle, excluded above
      }
      prev = cur;
      cur = next;
      ++steps;
      if (steps > star.size())
        throw Error(ErrorCode::BadLink, "walk around a (d-2)-cell does not close");
    } while (cur != start);
    if (steps != star.size())
      throw Error(ErrorCode::BadLink,
                  "chambers around a (d-2)-cell form more than one cycle");
  }
}

}  // namespace

Triangulation build_triangulation(int dim, std::vector<Cell> chambers) {
  if (dim < 2)
    throw Error(ErrorCode::DimensionOutOfRange, "dimension must be at least 2");

  for (Cell& c : chambers) {
    if (static_cast<int>(c.size()) != dim + 1)
      throw Error(ErrorCode::MalformedChamber,
                  "chamber must have exactly d+1 vertices");
    for (int v : c)
      if (v < 0)
        throw Error(ErrorCode::MalformedChamber, "negative vertex id");
    std::sort(c.begin(), c.end());
    if (!strictly_increasing(c))
      throw Error(ErrorCode::MalformedChamber, "repeated vertex in a chamber");
  }

  {
    std::set<Cell> seen;
    for (const Cell& c : chambers)
      if (!seen.insert(c).second)
        throw Error(ErrorCode::DuplicateChamber, "chamber listed twice");
  }

  // compact vertex ids, preserving order
  std::set<int> ids;
  for (const Cell& c : chambers) ids.insert(c.begin(), c.end());
  std::map<int, int> compact;
  for (int id : ids) compact.emplace(id, static_cast<int>(compact.size()));
  for (Cell& c : chambers)
    for (int& v : c) v = compact.at(v);

  Triangulation t;
  t.dim = dim;
  t.num_vertices = static_cast<int>(compact.size());
  t.chambers = std::move(chambers);

  auto stars = facet_stars(t);
  check_pseudomanifold(stars);
  check_dual_connected(t, stars);
  check_links(t, stars);
  return t;
}

std::vector<Cell> cells(const Triangulation& t, int k) {
  if (k < 0 || k > t.dim)
    throw Error(ErrorCode::DimensionOutOfRange,
                "cell dimension outside [0, d]");
  std::set<Cell> out;
  for (const Cell& c : t.chambers)
    for (Cell& sub : subsets_of_size(c, k + 1)) out.insert(std::move(sub));
  return std::vector<Cell>(out.begin(), out.end());
}

int incidence_count(const Triangulation& t, const Cell& f) {
  if (static_cast<int>(f.size()) != t.dim - 1 || !strictly_increasing(f))
    throw Error(ErrorCode::NotACell, "expected a sorted (d-2)-cell");
  std::set<Cell> facets;
  bool found = false;
  for (const Cell& c : t.chambers) {
    if (!contains_cell(c, f)) continue;
    found = true;
    for (int v : c) {
      if (position_of(f, v) >= 0) continue;
      Cell facet = f;
      facet.insert(std::lower_bound(facet.begin(), facet.end(), v), v);
      facets.insert(std::move(facet));
    }
  }
  if (!found) throw Error(ErrorCode::NotACell, "not a (d-2)-cell of T");
  return static_cast<int>(facets.size());
}

std::map<Cell, int> incidence_counts(const Triangulation& t) {
  // around f, #chambers = #facets containing f, so counting star chambers
  // gives the incidence directly
  std::map<Cell, int> counts;
  for (const Cell& c : t.chambers)
    for (const Cell& f : subsets_of_size(c, t.dim - 1)) ++counts[f];
  return counts;
}

Graph skeleton(const Triangulation& t) {
  Graph g(t.num_vertices);
  for (const Cell& c : t.chambers)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) g.add_edge(c[i], c[j]);
  return g;
}

SubdivisionResult subdivide_with_layout(const Triangulation& t,
                                        const std::vector<int>& s) {
  std::set<int> chosen;
  for (int i : s) {
    if (i < 0 || i >= t.chamber_count())
      throw Error(ErrorCode::BadParams, "chamber index out of range");
    chosen.insert(i);
  }

  SubdivisionResult result;
  int next_vertex = t.num_vertices;
  std::vector<Cell> new_chambers;
  for (int i = 0; i < t.chamber_count(); ++i) {
    if (!chosen.count(i)) {
      new_chambers.push_back(t.chambers[i]);
      result.parent.push_back(i);
      result.omitted_position.push_back(-1);
      continue;
    }
    int w = next_vertex++;
    result.new_vertex[i] = w;
    for (int pos = 0; pos <= t.dim; ++pos) {
      Cell child = facet_omitting(t.chambers[i], pos);
      child.push_back(w);  // fresh id is larger than everything, stays sorted
      new_chambers.push_back(std::move(child));
      result.parent.push_back(i);
      result.omitted_position.push_back(pos);
    }
  }
  result.triangulation = build_triangulation(t.dim, std::move(new_chambers));
  if (result.triangulation.num_vertices != next_vertex)
    throw Error(ErrorCode::InternalInvariant,
                "subdivision changed the vertex id range");
  return result;
}

Triangulation subdivide(const Triangulation& t, const std::vector<int>& s) {
  return subdivide_with_layout(t, s).triangulation;
}

}  // namespace sct
