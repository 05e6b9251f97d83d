#include "sct/orientation.hpp"

#include <deque>
#include <map>

#include "sct/errors.hpp"

namespace sct {

namespace {

struct FacetPair {
  int s, t;        // the two chambers, s < t
  int pos_s, pos_t;  // positions of the omitted vertex in each sorted tuple
};

std::vector<FacetPair> facet_pairs(const Triangulation& t) {
  std::map<Cell, std::vector<std::pair<int, int>>> stars;  // facet -> (chamber, pos)
  for (int i = 0; i < t.chamber_count(); ++i)
    for (int pos = 0; pos <= t.dim; ++pos)
      stars[facet_omitting(t.chambers[i], pos)].emplace_back(i, pos);
  std::vector<FacetPair> out;
  out.reserve(stars.size());
  for (const auto& [facet, star] : stars) {
    if (star.size() != 2)
      throw Error(ErrorCode::NotPseudomanifold, "facet not shared by 2 chambers");
    FacetPair p;
    if (star[0].first < star[1].first) {
      p = {star[0].first, star[1].first, star[0].second, star[1].second};
    } else {
      p = {star[1].first, star[0].first, star[1].second, star[0].second};
    }
    out.push_back(p);
  }
  return out;
}

int relative_sign(const FacetPair& p) {
  // sign[t] / sign[s] for coherence across this facet
  return ((p.pos_s + p.pos_t) % 2 == 0) ? -1 : +1;
}

}  // namespace

OrientationAssignment coherent_orientation(const Triangulation& t) {
  auto pairs = facet_pairs(t);
  std::vector<std::vector<int>> incident(t.chamber_count());
  for (int e = 0; e < static_cast<int>(pairs.size()); ++e) {
    incident[pairs[e].s].push_back(e);
    incident[pairs[e].t].push_back(e);
  }

  std::vector<int> sign(t.chamber_count(), 0);
  sign[0] = +1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int e : incident[u]) {
      const FacetPair& p = pairs[e];
      int v = (p.s == u) ? p.t : p.s;
      int expected = sign[u] * relative_sign(p);
      if (sign[v] == 0) {
        sign[v] = expected;
        queue.push_back(v);
      } else if (sign[v] != expected) {
        throw Error(ErrorCode::NonOrientable,
                    "orientation propagation reached a chamber with "
                    "conflicting signs");
      }
    }
  }
  return OrientationAssignment{std::move(sign)};
}

bool orientation_is_coherent(const Triangulation& t,
                             const OrientationAssignment& orient) {
  if (static_cast<int>(orient.sign.size()) != t.chamber_count()) return false;
  for (int s : orient.sign)
    if (s != +1 && s != -1) return false;
  for (const FacetPair& p : facet_pairs(t))
    if (orient.sign[p.t] != orient.sign[p.s] * relative_sign(p)) return false;
  return true;
}

OrientationAssignment extend_orientation(const Triangulation& t,
                                         const SubdivisionResult& layout,
                                         const OrientationAssignment& orient) {
  if (static_cast<int>(orient.sign.size()) != t.chamber_count())
    throw Error(ErrorCode::BadParams, "orientation does not match complex");
  OrientationAssignment out;
  out.sign.resize(layout.triangulation.chamber_count());
  for (int i = 0; i < layout.triangulation.chamber_count(); ++i) {
    int parent_sign = orient.sign[layout.parent[i]];
    int pos = layout.omitted_position[i];
    if (pos < 0) {
      out.sign[i] = parent_sign;
    } else {
      out.sign[i] = ((t.dim - pos) % 2 == 0) ? parent_sign : -parent_sign;
    }
  }
  return out;
}

}  // namespace sct
