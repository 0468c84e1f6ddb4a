#include <numeric>
#include <stdexcept>

#include "pweave/symmetry.hpp"

namespace pweave {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (int v = 0; v < size(); ++v) inv[images_[v]] = v;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (int v = 0; v < size(); ++v) {
    if (seen[v]) continue;
    std::uint64_t len = 0;
    for (int x = v; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different size");
  Permutation r;
  r.images_.resize(q.images_.size());
  for (int v = 0; v < q.size(); ++v) r.images_[v] = p.images_[q.images_[v]];
  return r;
}

}  // namespace pweave
