#pragma once

#include <algorithm>
#include <vector>

namespace sct {

// A cell is a strictly increasing tuple of vertex ids.  A k-cell has k+1
// vertices.  std::vector keeps lexicographic ordering for free, which is the
// tie-break order used everywhere deterministic output is promised.
using Cell = std::vector<int>;

inline bool strictly_increasing(const Cell& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i - 1] >= c[i]) return false;
  return true;
}

// The facet of `c` obtained by dropping the vertex at position `pos`.
inline Cell facet_omitting(const Cell& c, int pos) {
  Cell f;
  f.reserve(c.size() - 1);
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (i != pos) f.push_back(c[i]);
  return f;
}

// Position of vertex v in sorted cell c, or -1.
inline int position_of(const Cell& c, int v) {
  auto it = std::lower_bound(c.begin(), c.end(), v);
  if (it == c.end() || *it != v) return -1;
  return static_cast<int>(it - c.begin());
}

inline bool contains_cell(const Cell& big, const Cell& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// All subsets of `c` with `k` elements, in lexicographic order.
inline std::vector<Cell> subsets_of_size(const Cell& c, int k) {
  std::vector<Cell> out;
  if (k < 0 || k > static_cast<int>(c.size())) return out;
  Cell cur;
  cur.reserve(k);
  // iterative combination enumeration would do, recursion is clearer
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < c.size(); ++i) {
      cur.push_back(c[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace sct
