#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cluster {

/// A bijection of {0, ..., n-1}. Printed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// Cycle (c0 c1 ... cm) on n points, 0-based entries.
  static Permutation cycle(std::size_t n, std::initializer_list<std::size_t> points);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
  /// All n! permutations in lexicographic order of their image tuples.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle notation, 1-based, e.g. "(1 2 3)"; identity prints "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

}  // namespace cluster
