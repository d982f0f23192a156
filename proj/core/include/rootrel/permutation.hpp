#pragma once

#include <vector>

namespace rootrel::group {

// Permutations of {0..n-1} stored as image vectors: p[i] is the image of i.
// External formats are 1-based; conversion happens at the JSON boundary.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  // (a*b)(i) = a(b(i))
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }
  bool is_identity() const;
  int order() const;

 private:
  std::vector<int> images_;
};

}  // namespace rootrel::group
