#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace sct {

// Simple undirected graph on vertices 0..n-1.  Duplicate edges are tolerated
// on input and deduplicated, so callers may feed multigraph edge lists.
class Graph {
 public:
  explicit Graph(int n = 0) : adj_(n) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }

  // Sorted list of edges {u,v} with u < v.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

 private:
  std::vector<std::vector<int>> adj_;  // each list kept sorted, no duplicates
};

// A colouring of vertices (of a graph, or of a triangulation's skeleton)
// with colours drawn from {0..k-1}.  Properness is a separate check; the
// struct itself only promises the range.
struct VertexColouring {
  int k = 0;
  std::vector<int> colours;
};

bool verify_proper(const Graph& g, const VertexColouring& psi);

bool is_bipartite(const Graph& g);

// Deterministic exact k-colouring: backtracking over vertices in index order,
// trying colours in increasing order.  Returns the lexicographically least
// proper colouring, or nullopt if none exists.  Intended for desk-scale
// instances; no symmetry breaking beyond the fixed orders.
std::optional<VertexColouring> exact_graph_colouring(const Graph& g, int k);

}  // namespace sct
