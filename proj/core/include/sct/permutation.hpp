#pragma once

#include <vector>

namespace sct {

// Permutation of {0..k-1} stored as an image table.
//
// Composition convention, fixed once for the whole library:
//   (a * b)(x) = a(b(x))        -- apply b first, then a.
//
// Colourings of a chamber are bijections sigma: positions -> colours; gains
// act on them on the right, sigma |-> sigma * rho.  Every composition in the
// library goes through operator* so the convention cannot drift.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;

  // +1 for even permutations, -1 for odd.
  int parity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<int> img_;
};

}  // namespace sct
