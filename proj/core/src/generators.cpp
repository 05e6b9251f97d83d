#include "sct/generators.hpp"

#include <random>

#include "sct/errors.hpp"

namespace sct {

Triangulation simplex_boundary(int d) {
  if (d < 2)
    throw Error(ErrorCode::DimensionOutOfRange, "dimension must be at least 2");
  Cell all(d + 2);
  for (int i = 0; i <= d + 1; ++i) all[i] = i;
  return build_triangulation(d, subsets_of_size(all, d + 1));
}

Triangulation cross_polytope_boundary(int d) {
  if (d < 2)
    throw Error(ErrorCode::DimensionOutOfRange, "dimension must be at least 2");
  const int axes = d + 1;
  std::vector<Cell> chambers;
  chambers.reserve(std::size_t{1} << axes);
  for (int mask = 0; mask < (1 << axes); ++mask) {
    Cell c(axes);
    for (int i = 0; i < axes; ++i) {
      int bit = (mask >> (axes - 1 - i)) & 1;  // axis 0 varies slowest
      c[i] = 2 * i + bit;
    }
    chambers.push_back(std::move(c));  // lexicographic by construction
  }
  return build_triangulation(d, std::move(chambers));
}

Triangulation cyclic_polytope_boundary(int n) {
  if (n < 5)
    throw Error(ErrorCode::TooFewVertices,
                "cyclic 4-polytope boundary needs at least 5 vertices");
  Cell ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i;
  std::vector<Cell> chambers;
  for (Cell& candidate : subsets_of_size(ground, 4)) {
    // Gale evenness: for every pair of vertices outside the candidate, an
    // even number of candidate members lies strictly between them
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (position_of(candidate, i) >= 0) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        if (position_of(candidate, j) >= 0) continue;
        int between = 0;
        for (int v : candidate)
          if (i < v && v < j) ++between;
        if (between % 2 != 0) ok = false;
      }
    }
    if (ok) chambers.push_back(std::move(candidate));
  }
  return build_triangulation(3, std::move(chambers));
}

Triangulation double_cone(const Triangulation& t) {
  const int x = t.num_vertices;
  const int y = t.num_vertices + 1;
  std::vector<Cell> chambers;
  chambers.reserve(2 * t.chambers.size());
  for (int apex : {x, y}) {
    for (const Cell& c : t.chambers) {
      Cell coned = c;
      coned.push_back(apex);  // apex ids exceed every base id
      chambers.push_back(std::move(coned));
    }
  }
  return build_triangulation(t.dim + 1, std::move(chambers));
}

Triangulation maximal_subdivision(const Triangulation& t) {
  std::vector<int> all(t.chamber_count());
  for (int i = 0; i < t.chamber_count(); ++i) all[i] = i;
  return subdivide(t, all);
}

Triangulation random_subdivision(const Triangulation& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> chosen;
  for (int i = 0; i < t.chamber_count(); ++i)
    if (coin(rng)) chosen.push_back(i);
  return subdivide(t, chosen);
}

}  // namespace sct
