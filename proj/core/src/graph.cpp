#include "sct/graph.hpp"

#include <algorithm>
#include <deque>

#include "sct/errors.hpp"

namespace sct {

void Graph::add_edge(int u, int v) {
  if (u == v) throw Error(ErrorCode::BadParams, "self-loop in simple graph");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
  auto insert = [](std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& list : adj_) total += static_cast<int>(list.size());
  return total / 2;
}

bool verify_proper(const Graph& g, const VertexColouring& psi) {
  if (static_cast<int>(psi.colours.size()) != g.vertex_count()) return false;
  for (int c : psi.colours)
    if (c < 0 || c >= psi.k) return false;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbours(u))
      if (psi.colours[u] == psi.colours[v]) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbours(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<VertexColouring> exact_graph_colouring(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 0) throw Error(ErrorCode::BadParams, "negative colour count");
  std::vector<int> colour(n, -1);
  int v = 0;
  // iterative backtracking; colour[v] holds the last colour tried at depth v
  while (v >= 0 && v < n) {
    bool placed = false;
    for (int c = colour[v] + 1; c < k; ++c) {
      bool ok = true;
      for (int u : g.neighbours(v)) {
        if (u < v && colour[u] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        colour[v] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
    } else {
      colour[v] = -1;
      --v;
    }
  }
  if (v < 0) return std::nullopt;
  return VertexColouring{k, std::move(colour)};
}

}  // namespace sct
