#include "sct/complex2.hpp"

#include <algorithm>
#include <set>

#include "sct/errors.hpp"

namespace sct {

Complex2 build_complex2(std::vector<int> vertices, std::vector<Cell> edges,
                        std::vector<Cell> faces) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  std::set<int> vertex_set(vertices.begin(), vertices.end());

  auto normalise = [&](std::vector<Cell>& list, std::size_t arity,
                       const char* what) {
    std::set<Cell> seen;
    for (Cell& c : list) {
      if (c.size() != arity)
        throw Error(ErrorCode::MalformedComplex, std::string(what) +
                        " with wrong number of vertices");
      std::sort(c.begin(), c.end());
      if (!strictly_increasing(c))
        throw Error(ErrorCode::MalformedComplex,
                    std::string(what) + " with repeated vertex");
      for (int v : c)
        if (!vertex_set.count(v))
          throw Error(ErrorCode::UnknownVertex,
                      std::string(what) + " uses an unlisted vertex");
      if (!seen.insert(c).second)
        throw Error(ErrorCode::MalformedComplex,
                    std::string(what) + " listed twice");
    }
    std::sort(list.begin(), list.end());
  };
  normalise(edges, 2, "edge");
  normalise(faces, 3, "face");

  std::set<Cell> edge_set(edges.begin(), edges.end());
  for (const Cell& f : faces)
    for (const Cell& e : subsets_of_size(f, 2))
      if (!edge_set.count(e))
        throw Error(ErrorCode::MalformedComplex,
                    "face boundary edge missing from edge list");

  return Complex2{std::move(vertices), std::move(edges), std::move(faces)};
}

Complex2 two_skeleton(const Triangulation& t) {
  std::vector<int> vertices(t.num_vertices);
  for (int v = 0; v < t.num_vertices; ++v) vertices[v] = v;
  return build_complex2(std::move(vertices), cells(t, 1), cells(t, 2));
}

LinkGraph link_graph(const Complex2& c, int v) {
  if (!std::binary_search(c.vertices.begin(), c.vertices.end(), v))
    throw Error(ErrorCode::UnknownVertex, "link of a vertex not in the complex");

  LinkGraph link;
  for (const Cell& e : c.edges)
    if (position_of(e, v) >= 0) link.edge_of_vertex.push_back(e);

  link.graph = Graph(static_cast<int>(link.edge_of_vertex.size()));
  std::set<Cell> face_set(c.faces.begin(), c.faces.end());
  for (std::size_t i = 0; i < link.edge_of_vertex.size(); ++i) {
    for (std::size_t j = i + 1; j < link.edge_of_vertex.size(); ++j) {
      // two edges {v,a}, {v,b} meet in the link iff {v,a,b} is a face
      int a = link.edge_of_vertex[i][0] == v ? link.edge_of_vertex[i][1]
                                             : link.edge_of_vertex[i][0];
      int b = link.edge_of_vertex[j][0] == v ? link.edge_of_vertex[j][1]
                                             : link.edge_of_vertex[j][0];
      Cell face{v, a, b};
      std::sort(face.begin(), face.end());
      if (face_set.count(face))
        link.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return link;
}

}  // namespace sct
