#include "rootrel/permutation.hpp"

#include <algorithm>

#include "rootrel/errors.hpp"

namespace rootrel::group {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw RequestError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[i] = images_[o.images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::order() const {
  Permutation p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = *this * p;
    ++k;
    if (k > static_cast<int>(images_.size()) * static_cast<int>(images_.size()))
      throw Error("permutation order runaway");
  }
  return k;
}

}  // namespace rootrel::group
