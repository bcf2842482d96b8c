#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/laurent.hpp"
#include "cluster/permutation.hpp"
#include "cluster/valued_quiver.hpp"

namespace cluster {

/// Mutation directions (0-based), applied left to right: {i1, ..., ik} means
/// mu_{ik} o ... o mu_{i1}, so i1 acts first.
using MutationWord = std::vector<std::size_t>;

/// "[2,1]" using 1-based directions.
std::string word_to_string(const MutationWord& w);

/// Labeled seed: a cluster expanded in the ambient variables t_1..t_m together
/// with its exchange matrix (the quiver is a view of the matrix).
struct Seed {
  std::vector<LaurentPoly> cluster;
  ExchangeMatrix matrix;

  std::size_t rank() const { return cluster.size(); }
  ValuedQuiver quiver() const { return quiver_from_matrix(matrix); }

  friend bool operator==(const Seed&, const Seed&) = default;
  std::size_t hash() const;
};

struct SeedHash {
  std::size_t operator()(const Seed& s) const { return s.hash(); }
};

/// Cluster (t_1, ..., t_n) with the given quiver.
Seed initial_seed(const ExchangeMatrix& b);
Seed initial_seed(const ValuedQuiver& q);

/// prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}, products over the
/// cluster entries; empty products are 1.
LaurentPoly exchange_binomial(const Seed& p, std::size_t k);

/// Exchange relation x_k x'_k = f_{p,x_k} plus matrix mutation. Throws
/// LaurentPhenomenonViolation if the quotient is not a Laurent polynomial.
Seed mutate_seed(const Seed& p, std::size_t k);

Seed apply_word(Seed p, const MutationWord& w);

/// Quiver-automorphism action relative to the initial variables: every cluster
/// entry goes through permute_variables(sigma, .) in place, and the matrix is
/// relabeled by permute_matrix.
Seed apply_automorphism_to_seed(const Permutation& sigma, const Seed& q);

/// The same seed with vertex i renamed sigma(i): y_{sigma(i)} = x_i and
/// B' = permute_matrix(sigma, B). The two seeds are sigma-similar with epsilon = +1.
Seed relabel_seed(const Permutation& sigma, const Seed& p);

}  // namespace cluster
