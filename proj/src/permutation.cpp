#include "cluster/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "cluster/errors.hpp"

namespace cluster {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidInput("permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::size_t n, std::initializer_list<std::size_t> points) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<std::size_t> pts(points);
  for (std::size_t p : pts) {
    if (p >= n) throw InvalidInput("cycle point out of range");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    images[pts[i]] = pts[(i + 1) % pts.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  return cycle(n, {a, b});
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = images_[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require_same_size(a.size(), b.size(), "permutation composition");
  std::vector<std::size_t> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

}  // namespace cluster
