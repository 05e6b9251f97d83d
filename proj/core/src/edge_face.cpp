#include "sct/edge_face.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "sct/errors.hpp"
#include "sct/vertex_colouring.hpp"

namespace sct {

namespace {

void require_dimension(const Triangulation& t, int d, const char* what) {
  if (t.dim != d)
    throw Error(ErrorCode::WrongDimension,
                std::string(what) + " requires a triangulation of dimension " +
                    std::to_string(d));
}

void require_shape(const Triangulation& t, const VertexColouring& psi) {
  if (static_cast<int>(psi.colours.size()) != t.num_vertices)
    throw Error(ErrorCode::WrongColourCount,
                "colouring does not cover the vertex set");
  for (int c : psi.colours)
    if (c < 0 || c >= psi.k)
      throw Error(ErrorCode::WrongColourCount, "colour out of range");
}

void require_proper(const Triangulation& t, const VertexColouring& psi) {
  require_shape(t, psi);
  if (!verify_proper(skeleton(t), psi))
    throw Error(ErrorCode::NotProper, "vertex colouring is not proper");
}

}  // namespace

EdgeColouring mono_free_colouring_K(int n, int k) {
  EdgeColouring out;
  out.k = k;
  if (n == kMonoFreeMaxOrder2 && k == 2) {
    // pentagon edges red (0), pentagram diagonals blue (1)
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) {
        int diff = v - u;
        out.colour[{u, v}] = (diff == 1 || diff == 4) ? 0 : 1;
      }
    }
    return out;
  }
  if (n == kMonoFreeMaxOrder3 && k == 3) {
    // GF(16) = GF(2)[x]/(x^4 + x + 1); x generates the multiplicative group
    std::array<int, 16> log{};
    int element = 1;
    for (int power = 0; power < 15; ++power) {
      log[element] = power;
      element <<= 1;
      if (element & 0x10) element ^= 0x13;
    }
    for (int u = 0; u < 16; ++u)
      for (int v = u + 1; v < 16; ++v)
        out.colour[{u, v}] = log[u ^ v] % 3;
    return out;
  }
  throw Error(ErrorCode::UnsupportedSize,
              "witness available only for (n,k) = (5,2) or (16,3)");
}

EdgeColouring edge_colour_no_mono_faces(const Triangulation& t, int k,
                                        const VertexColouring& psi) {
  require_dimension(t, 3, "edge_colour_no_mono_faces");
  int expected = 0;
  if (k == 2) expected = kMonoFreeMaxOrder2;
  else if (k == 3) expected = kMonoFreeMaxOrder3;
  else throw Error(ErrorCode::UnsupportedSize, "k must be 2 or 3");
  if (psi.k != expected)
    throw Error(ErrorCode::WrongColourCount,
                "need exactly " + std::to_string(expected) + " colours");
  require_proper(t, psi);

  EdgeColouring witness = mono_free_colouring_K(expected, k);
  EdgeColouring out;
  out.k = k;
  for (const Cell& e : cells(t, 1)) {
    Cell pair{psi.colours[e[0]], psi.colours[e[1]]};
    std::sort(pair.begin(), pair.end());
    out.colour[e] = witness.colour.at(pair);
  }
  for (const Cell& face : cells(t, 2)) {
    auto edges = subsets_of_size(face, 2);
    int c0 = out.colour.at(edges[0]);
    if (c0 == out.colour.at(edges[1]) && c0 == out.colour.at(edges[2]))
      throw Error(ErrorCode::InternalInvariant,
                  "monochromatic face despite mono-free witness");
  }
  return out;
}

std::optional<EdgeColouring> derive_path_colouring(const Triangulation& t) {
  require_dimension(t, 3, "derive_path_colouring");
  auto psi = exact_graph_colouring(skeleton(t), 5);
  if (!psi) return std::nullopt;

  // extend to the maximal subdivision: each fresh vertex sees 4 distinct
  // colours, so exactly one of the 5 is left for it
  std::vector<int> all(t.chamber_count());
  for (int i = 0; i < t.chamber_count(); ++i) all[i] = i;
  auto layout = subdivide_with_layout(t, all);
  VertexColouring extended;
  extended.k = 5;
  extended.colours = psi->colours;
  extended.colours.resize(layout.triangulation.num_vertices, -1);
  for (const auto& [chamber, w] : layout.new_vertex) {
    int missing = 0 + 1 + 2 + 3 + 4;
    for (int v : t.chambers[chamber]) missing -= psi->colours[v];
    extended.colours[w] = missing;
  }

  EdgeColouring on_subdivision =
      edge_colour_no_mono_faces(layout.triangulation, 2, extended);

  EdgeColouring out;
  out.k = 2;
  for (const Cell& e : cells(t, 1)) out.colour[e] = on_subdivision.colour.at(e);

  // each chamber must split 3 red / 3 blue with both classes spanning paths
  for (const Cell& c : t.chambers) {
    for (int colour_class = 0; colour_class < 2; ++colour_class) {
      int degree[4] = {0, 0, 0, 0};
      int count = 0;
      for (const Cell& e : subsets_of_size(c, 2)) {
        if (out.colour.at(e) != colour_class) continue;
        ++count;
        ++degree[position_of(c, e[0])];
        ++degree[position_of(c, e[1])];
      }
      int ones = 0, twos = 0;
      for (int d : degree) {
        if (d == 1) ++ones;
        if (d == 2) ++twos;
      }
      if (count != 3 || ones != 2 || twos != 2)
        throw Error(ErrorCode::InternalInvariant,
                    "restricted 2-colouring is not a pair of spanning paths");
    }
  }
  return out;
}

namespace {

// vertices of the chamber in red-path order, starting at the smaller endpoint
std::array<int, 4> red_path_order(const Cell& chamber,
                                  const EdgeColouring& colouring) {
  std::vector<std::vector<int>> red_adj(4);
  int red_edges = 0;
  for (const Cell& e : subsets_of_size(chamber, 2)) {
    auto it = colouring.colour.find(e);
    if (it == colouring.colour.end())
      throw Error(ErrorCode::NotAPathColouring, "chamber edge is uncoloured");
    if (it->second == 0) {
      ++red_edges;
      red_adj[position_of(chamber, e[0])].push_back(position_of(chamber, e[1]));
      red_adj[position_of(chamber, e[1])].push_back(position_of(chamber, e[0]));
    }
  }
  int start = -1;
  for (int p = 0; p < 4; ++p) {
    if (red_adj[p].size() == 1 && start == -1) start = p;
    if (red_adj[p].size() > 2)
      throw Error(ErrorCode::NotAPathColouring, "red degree exceeds 2");
  }
  if (red_edges != 3 || start == -1)
    throw Error(ErrorCode::NotAPathColouring,
                "red edges of a chamber do not form a spanning path");
  std::array<int, 4> order{};
  int prev = -1, cur = start;
  for (int step = 0; step < 4; ++step) {
    order[step] = chamber[cur];
    int next = -1;
    for (int cand : red_adj[cur])
      if (cand != prev) next = cand;
    prev = cur;
    cur = next;
    if (step < 3 && cur == -1)
      throw Error(ErrorCode::NotAPathColouring,
                  "red edges of a chamber do not form a spanning path");
  }
  return order;
}

int path_parity(const Cell& chamber, const std::array<int, 4>& order) {
  std::vector<int> img(4);
  for (int i = 0; i < 4; ++i) img[i] = position_of(chamber, order[i]);
  return Permutation(std::move(img)).parity();
}

}  // namespace

std::vector<ChamberParity> classify_chambers(
    const Triangulation& t, const EdgeColouring& path_colouring,
    const OrientationAssignment& orient) {
  require_dimension(t, 3, "classify_chambers");
  if (path_colouring.k != 2)
    throw Error(ErrorCode::WrongColourCount, "expected a 2-edge-colouring");
  if (static_cast<int>(orient.sign.size()) != t.chamber_count())
    throw Error(ErrorCode::BadParams, "orientation does not match complex");

  std::vector<ChamberParity> out;
  out.reserve(t.chambers.size());
  for (int i = 0; i < t.chamber_count(); ++i) {
    auto order = red_path_order(t.chambers[i], path_colouring);
    int sign = orient.sign[i] * path_parity(t.chambers[i], order);
    // reversal is the double transposition (03)(12): even, same verdict
    std::array<int, 4> reversed{order[3], order[2], order[1], order[0]};
    if (sign != orient.sign[i] * path_parity(t.chambers[i], reversed))
      throw Error(ErrorCode::InternalInvariant,
                  "path reversal changed the chamber class");
    out.push_back(sign > 0 ? ChamberParity::Even : ChamberParity::Odd);
  }
  return out;
}

OddSubdivisionResult subdivide_odd(const Triangulation& t,
                                   const EdgeColouring& path_colouring,
                                   const OrientationAssignment& orient) {
  auto classes = classify_chambers(t, path_colouring, orient);
  OddSubdivisionResult result;
  for (int i = 0; i < t.chamber_count(); ++i)
    if (classes[i] == ChamberParity::Odd) result.subdivided.push_back(i);

  auto layout = subdivide_with_layout(t, result.subdivided);
  result.triangulation = layout.triangulation;
  result.colouring.k = 2;
  result.colouring.colour = path_colouring.colour;
  for (const auto& [chamber, w] : layout.new_vertex) {
    auto order = red_path_order(t.chambers[chamber], path_colouring);
    // red to the path's endpoints, blue to its interior
    auto paint = [&](int v, int colour) {
      Cell e{v, w};  // w is fresh, larger than every old id
      result.colouring.colour[e] = colour;
    };
    paint(order[0], 0);
    paint(order[3], 0);
    paint(order[1], 1);
    paint(order[2], 1);
  }

  // the construction must land in the all-even, divisible-by-three regime
  result.orientation = extend_orientation(t, layout, orient);
  for (ChamberParity p :
       classify_chambers(result.triangulation, result.colouring,
                         result.orientation))
    if (p != ChamberParity::Even)
      throw Error(ErrorCode::InternalInvariant,
                  "odd chamber survived the odd-chamber subdivision");
  if (!div3_condition(result.triangulation))
    throw Error(ErrorCode::InternalInvariant,
                "odd-chamber subdivision broke the mod-3 condition");
  return result;
}

EdgeColouring four_edge_colour(const Complex2& c) {
  EdgeColouring out;
  out.k = 4;
  // peel vertices from the top; edges {u,v} are coloured when their larger
  // endpoint is peeled, via the link inside the induced complex below it
  for (std::size_t idx = 0; idx < c.vertices.size(); ++idx) {
    int v = c.vertices[idx];
    std::vector<int> kept(c.vertices.begin(), c.vertices.begin() + idx + 1);
    std::set<int> kept_set(kept.begin(), kept.end());
    auto within = [&](const Cell& cell) {
      for (int u : cell)
        if (!kept_set.count(u)) return false;
      return true;
    };
    std::vector<Cell> edges, faces;
    for (const Cell& e : c.edges)
      if (within(e)) edges.push_back(e);
    for (const Cell& f : c.faces)
      if (within(f)) faces.push_back(f);
    Complex2 induced = build_complex2(kept, std::move(edges), std::move(faces));

    auto link = link_graph(induced, v);
    if (link.edge_of_vertex.empty()) continue;
    auto colouring = exact_graph_colouring(link.graph, 4);
    if (!colouring)
      throw Error(ErrorCode::LinkNotFourColourable,
                  "link graph admits no proper 4-colouring");
    for (std::size_t i = 0; i < link.edge_of_vertex.size(); ++i)
      out.colour[link.edge_of_vertex[i]] = colouring->colours[i];
  }

  for (const Cell& f : c.faces) {
    auto edges = subsets_of_size(f, 2);
    int c0 = out.colour.at(edges[0]);
    if (c0 == out.colour.at(edges[1]) && c0 == out.colour.at(edges[2]))
      throw Error(ErrorCode::InternalInvariant,
                  "monochromatic face in 4-edge-colouring");
  }
  return out;
}

OneFactorization one_factorization(int m) {
  if (m < 2 || m % 2 != 0)
    throw Error(ErrorCode::OddOrder,
                "1-factorization of K_m needs even m >= 2");
  OneFactorization out;
  out.m = m;
  const int n = m - 1;
  for (int r = 0; r < n; ++r) {
    std::vector<std::pair<int, int>> matching;
    matching.emplace_back(std::min(m - 1, r), std::max(m - 1, r));
    for (int i = 1; i <= m / 2 - 1; ++i) {
      int u = (r + i) % n;
      int v = (r - i + n) % n;
      matching.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(matching.begin(), matching.end());
    out.matchings.push_back(std::move(matching));
  }
  return out;
}

EdgeColouring proper_edge_colouring(const Triangulation& t,
                                    const VertexColouring& psi) {
  if (psi.k % 2 != 0)
    throw Error(ErrorCode::OddColourCount,
                "need an even number of colours; pad k by one");
  require_proper(t, psi);

  auto factorization = one_factorization(psi.k);
  std::map<Cell, int> matching_of_pair;
  for (int i = 0; i < static_cast<int>(factorization.matchings.size()); ++i)
    for (const auto& [a, b] : factorization.matchings[i])
      matching_of_pair[{a, b}] = i;

  EdgeColouring out;
  out.k = psi.k - 1;
  for (const Cell& e : cells(t, 1)) {
    Cell pair{psi.colours[e[0]], psi.colours[e[1]]};
    std::sort(pair.begin(), pair.end());
    out.colour[e] = matching_of_pair.at(pair);
  }

  for (const Cell& f : cells(t, 2)) {
    auto edges = subsets_of_size(f, 2);
    std::set<int> seen;
    for (const Cell& e : edges) seen.insert(out.colour.at(e));
    if (seen.size() != 3)
      throw Error(ErrorCode::InternalInvariant,
                  "face with repeated edge colours");
  }
  return out;
}

FaceColouring face_colouring_5(const Triangulation& t,
                               const VertexColouring& psi) {
  require_dimension(t, 3, "face_colouring_5");
  if (psi.k != 5)
    throw Error(ErrorCode::WrongColourCount, "need exactly 5 colours");
  require_proper(t, psi);

  // maximum matchings of K_5 = 1-factorization of K_6 with vertex 5 deleted
  auto factorization = one_factorization(6);
  std::map<Cell, int> matching_of_pair;
  for (int i = 0; i < 5; ++i)
    for (const auto& [a, b] : factorization.matchings[i])
      if (b != 5) matching_of_pair[{a, b}] = i;

  FaceColouring out;
  for (const Cell& f : cells(t, 2)) {
    std::set<int> used;
    for (int v : f) used.insert(psi.colours[v]);
    Cell complement;
    for (int colour = 0; colour < 5; ++colour)
      if (!used.count(colour)) complement.push_back(colour);
    if (complement.size() != 2)
      throw Error(ErrorCode::InternalInvariant,
                  "face does not leave a complementary colour pair");
    out.colour[f] = matching_of_pair.at(complement);
  }

  for (const Cell& c : t.chambers) {
    std::set<int> seen;
    for (const Cell& f : subsets_of_size(c, 3)) seen.insert(out.colour.at(f));
    if (seen.size() != 4)
      throw Error(ErrorCode::InternalInvariant,
                  "chamber with repeated face colours");
  }
  return out;
}

}  // namespace sct
