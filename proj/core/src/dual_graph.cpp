#include "sct/dual_graph.hpp"

#include <algorithm>
#include <map>

#include "sct/errors.hpp"

namespace sct {

void DualGraph::rebuild_incidence() {
  incident.assign(chamber_count, {});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    incident[edges[e].s].push_back(e);
    if (edges[e].t != edges[e].s) incident[edges[e].t].push_back(e);
  }
}

DualGraph dual_graph(const Triangulation& t) {
  std::map<Cell, std::vector<int>> stars;
  for (int i = 0; i < t.chamber_count(); ++i)
    for (int pos = 0; pos <= t.dim; ++pos)
      stars[facet_omitting(t.chambers[i], pos)].push_back(i);

  DualGraph g;
  g.chamber_count = t.chamber_count();
  for (auto& [facet, star] : stars) {  // map iteration = lexicographic cells
    if (star.size() != 2)
      throw Error(ErrorCode::NotPseudomanifold, "facet not shared by 2 chambers");
    DualGraph::Edge e;
    e.s = std::min(star[0], star[1]);
    e.t = std::max(star[0], star[1]);
    e.cell = facet;
    g.edges.push_back(std::move(e));
  }
  g.rebuild_incidence();
  return g;
}

Graph dual_as_graph(const DualGraph& g) {
  Graph out(g.chamber_count);
  for (const auto& e : g.edges) out.add_edge(e.s, e.t);
  return out;
}

std::vector<FCycle> f_cycles(const Triangulation& t, const DualGraph& g) {
  // (d-2)-cell -> indices of dual edges whose cell contains it
  std::map<Cell, std::vector<int>> star_edges;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    for (const Cell& f : subsets_of_size(g.edges[e].cell, t.dim - 1))
      star_edges[f].push_back(e);

  std::vector<FCycle> out;
  for (auto& [f, edge_set] : star_edges) {
    // incident star edges per chamber; every chamber in the star has two
    std::map<int, std::vector<int>> at_chamber;
    for (int e : edge_set) {
      at_chamber[g.edges[e].s].push_back(e);
      at_chamber[g.edges[e].t].push_back(e);
    }
    for (auto& [chamber, inc] : at_chamber) {
      if (inc.size() != 2)
        throw Error(ErrorCode::BadLink,
                    "chamber has " + std::to_string(inc.size()) +
                        " star facets around a (d-2)-cell");
      std::sort(inc.begin(), inc.end());
    }

    FCycle cycle;
    cycle.f = f;
    int start = at_chamber.begin()->first;  // smallest chamber index
    int cur = start;
    int via = at_chamber.at(start)[0];      // smaller edge index fixes direction
    do {
      cycle.chambers.push_back(cur);
      cycle.edges.push_back(via);
      const auto& e = g.edges[via];
      cur = (e.s == cur) ? e.t : e.s;
      const auto& inc = at_chamber.at(cur);
      via = (inc[0] == via) ? inc[1] : inc[0];
      if (cycle.length() > static_cast<int>(edge_set.size()))
        throw Error(ErrorCode::BadLink, "f-cycle walk does not close");
    } while (cur != start);
    if (cycle.length() != static_cast<int>(at_chamber.size()) ||
        cycle.length() != static_cast<int>(edge_set.size()))
      throw Error(ErrorCode::BadLink,
                  "star of a (d-2)-cell is not a single cycle");
    out.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace sct
