#pragma once

#include <vector>

#include "sct/cell.hpp"
#include "sct/graph.hpp"
#include "sct/triangulation.hpp"

namespace sct {

// A 2-dimensional simplicial complex given by explicit vertex, edge and face
// lists.  Vertices are explicit so isolated ones are representable.  Every
// boundary edge of every face must be present.
struct Complex2 {
  std::vector<int> vertices;  // sorted, distinct
  std::vector<Cell> edges;    // sorted pairs, lexicographic, distinct
  std::vector<Cell> faces;    // sorted triples, lexicographic, distinct
};

// Validates and normalises (sorts tuples and lists, checks closure under
// face boundaries).  Throws MalformedComplex / UnknownVertex.
Complex2 build_complex2(std::vector<int> vertices, std::vector<Cell> edges,
                        std::vector<Cell> faces);

// The 2-skeleton of a triangulation (vertices, 1-cells, 2-cells).
Complex2 two_skeleton(const Triangulation& t);

// Link graph of a vertex: one graph vertex per incident edge of the complex,
// adjacent when the two edges span a face.  `edge_of_vertex` maps graph
// vertices back to the complex edges (lexicographic order).
struct LinkGraph {
  Graph graph;
  std::vector<Cell> edge_of_vertex;
};

LinkGraph link_graph(const Complex2& c, int v);

}  // namespace sct
