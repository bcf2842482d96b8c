#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cluster/integer.hpp"
#include "cluster/permutation.hpp"

namespace cluster {

using IntegerRows = std::vector<std::vector<Integer>>;

/// Minimal positive integral d with d_i b_ij = -d_j b_ji, computed per connected
/// component of the nonzero pattern; isolated vertices get 1. Empty when the
/// rows are not square, have a nonzero diagonal, or admit no such d.
std::optional<std::vector<Integer>> find_symmetrizer(const IntegerRows& rows);

/// Skew-symmetrizable integer matrix B. Every instance satisfies the invariant;
/// a symmetrizer witnessing it travels with the value.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  /// Throws NotSkewSymmetrizable (or InvalidInput for ragged rows).
  explicit ExchangeMatrix(const IntegerRows& rows);

  static ExchangeMatrix zero(std::size_t n);

  std::size_t rank() const { return n_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  /// A symmetrizer of this matrix. Not necessarily minimal after mutation;
  /// use find_symmetrizer for the minimal one.
  const std::vector<Integer>& symmetrizer() const { return d_; }
  IntegerRows rows() const;
  bool is_zero() const;

  ExchangeMatrix operator-() const;

  /// Entrywise equality; the carried symmetrizer is not compared.
  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  std::size_t hash() const;

  /// "[[0,2,0],[-2,0,1],[0,-1,0]]"
  std::string to_string() const;

 private:
  ExchangeMatrix(std::size_t n, std::vector<Integer> entries, std::vector<Integer> d)
      : n_(n), entries_(std::move(entries)), d_(std::move(d)) {}

  friend ExchangeMatrix mutate_matrix(const ExchangeMatrix&, std::size_t);
  friend ExchangeMatrix permute_matrix(const Permutation&, const ExchangeMatrix&);

  std::size_t n_ = 0;
  std::vector<Integer> entries_;
  std::vector<Integer> d_;
};

/// Matrix mutation in direction k (0-based), with sign(0) = 0.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

/// Relocation action: result(sigma(i), sigma(j)) = b(i, j).
ExchangeMatrix permute_matrix(const Permutation& sigma, const ExchangeMatrix& b);

struct ExchangeMatrixHash {
  std::size_t operator()(const ExchangeMatrix& b) const { return b.hash(); }
};

}  // namespace cluster
