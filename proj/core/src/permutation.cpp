#include "sct/permutation.hpp"

#include "sct/errors.hpp"

namespace sct {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw Error(ErrorCode::BadParams, "image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::parity() const {
  // sign = (-1)^(n - number of cycles)
  std::vector<char> seen(img_.size(), 0);
  int cycles = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return ((size() - cycles) % 2 == 0) ? +1 : -1;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::BadParams, "composing permutations of unequal size");
  std::vector<int> img(a.size());
  for (int x = 0; x < a.size(); ++x) img[x] = a(b(x));
  return Permutation(std::move(img));
}

}  // namespace sct
