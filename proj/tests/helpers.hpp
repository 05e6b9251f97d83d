// Shared fixtures for the test suites: an error-code probe, a non-orientable
// surface, small graph builders, and a corpus of sphere triangulations that
// several suites sweep over.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <sct/errors.hpp>
#include <sct/generators.hpp>
#include <sct/graph.hpp>
#include <sct/permutation.hpp>
#include <sct/triangulation.hpp>

namespace sct::testing {

// Error code thrown by fn, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorCode> thrown_code(F&& fn) {
  try {
    std::forward<F>(fn)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Six-vertex triangulation of the real projective plane: passes every
// validity check (pseudomanifold, connected dual, cyclic links) but admits
// no coherent orientation.
inline Triangulation projective_plane() {
  return build_triangulation(2, {{0, 1, 2},
                                 {0, 2, 3},
                                 {0, 3, 4},
                                 {0, 4, 5},
                                 {0, 1, 5},
                                 {1, 2, 4},
                                 {2, 3, 5},
                                 {1, 3, 4},
                                 {2, 4, 5},
                                 {1, 3, 5}});
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline std::vector<Permutation> all_permutations(int k) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

struct NamedInstance {
  std::string name;
  Triangulation t;
};

// Mixed corpus of sphere triangulations: polytope boundaries, double cones,
// and subdivisions.  Small enough that every suite can sweep it.
inline std::vector<NamedInstance> sphere_corpus() {
  std::vector<NamedInstance> out;
  auto add = [&](std::string name, Triangulation t) {
    out.push_back({std::move(name), std::move(t)});
  };
  add("simplex_boundary(2)", simplex_boundary(2));
  add("simplex_boundary(3)", simplex_boundary(3));
  add("simplex_boundary(4)", simplex_boundary(4));
  add("simplex_boundary(5)", simplex_boundary(5));
  add("octahedron", cross_polytope_boundary(2));
  add("cross_polytope_boundary(3)", cross_polytope_boundary(3));
  add("cross_polytope_boundary(4)", cross_polytope_boundary(4));
  add("cyclic_polytope_boundary(6)", cyclic_polytope_boundary(6));
  add("cyclic_polytope_boundary(7)", cyclic_polytope_boundary(7));
  add("double_cone(simplex_boundary(2))", double_cone(simplex_boundary(2)));
  add("double_cone(simplex_boundary(3))", double_cone(simplex_boundary(3)));
  add("double_cone(octahedron)", double_cone(cross_polytope_boundary(2)));
  add("double_cone^2(simplex_boundary(2))",
      double_cone(double_cone(simplex_boundary(2))));
  add("maximal_subdivision(simplex_boundary(2))",
      maximal_subdivision(simplex_boundary(2)));
  add("maximal_subdivision(simplex_boundary(3))",
      maximal_subdivision(simplex_boundary(3)));
  add("maximal_subdivision(octahedron)",
      maximal_subdivision(cross_polytope_boundary(2)));
  add("subdivide(simplex_boundary(3), {0})",
      subdivide(simplex_boundary(3), {0}));
  add("random_subdivision(simplex_boundary(3), 1)",
      random_subdivision(simplex_boundary(3), 1));
  add("random_subdivision(octahedron, 2)",
      random_subdivision(cross_polytope_boundary(2), 2));
  return out;
}

}  // namespace sct::testing
