#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/permutation.hpp"
#include "cluster/seed.hpp"

namespace cluster {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

/// Skew-symmetrizable with symmetrizer entries in {1,2,3} and |b_ij| <= bound.
/// Each pair gets b_ij = m*l/d_i, b_ji = -m*l/d_j with l = lcm(d_i, d_j).
inline ExchangeMatrix random_skew_symmetrizable(Rng& rng, std::size_t n, long bound) {
  std::vector<long> d(n);
  for (auto& x : d) x = uniform_int(rng, 1, 3);
  IntegerRows rows(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long l = std::lcm(d[i], d[j]);
      const long reach = bound * std::min(d[i], d[j]) / l;
      const long m = uniform_int(rng, -reach, reach);
      rows[i][j] = m * l / d[i];
      rows[j][i] = -m * l / d[j];
    }
  }
  return ExchangeMatrix(rows);
}

inline MutationWord random_word(Rng& rng, std::size_t n, std::size_t length) {
  MutationWord w(length);
  for (auto& k : w) k = uniform_index(rng, n);
  return w;
}

}  // namespace cluster
