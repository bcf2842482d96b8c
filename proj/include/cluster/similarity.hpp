#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/permutation.hpp"
#include "cluster/valued_quiver.hpp"

namespace cluster {

/// Largest rank for which factorial searches are attempted.
inline constexpr std::size_t kMaxSearchRank = 10;

/// (sigma, epsilon) with B'(sigma(i), sigma(j)) = epsilon * B(i, j) for all i, j,
/// i.e. B' = epsilon * permute_matrix(sigma, B): sigma is the vertex map of an
/// isomorphism from Q onto Q' (epsilon = +1) or onto Q'^op (epsilon = -1).
struct SimilarityWitness {
  Permutation sigma;
  int epsilon = 1;
  friend bool operator==(const SimilarityWitness&, const SimilarityWitness&) = default;
};

/// Witness for the given sigma, or empty. epsilon = +1 wins when both signs hold
/// (only for B = 0).
std::optional<SimilarityWitness> is_sigma_similar(const ExchangeMatrix& b, const ExchangeMatrix& b2,
                                                  const Permutation& sigma);
std::optional<SimilarityWitness> is_sigma_similar(const ValuedQuiver& q, const ValuedQuiver& q2,
                                                  const Permutation& sigma);

/// Every witness, sigma in lexicographic order. Throws RankTooLarge above kMaxSearchRank.
std::vector<SimilarityWitness> find_similarities(const ExchangeMatrix& b, const ExchangeMatrix& b2);
std::vector<SimilarityWitness> find_similarities(const ValuedQuiver& q, const ValuedQuiver& q2);

/// First witness in lexicographic order, without a rank guard.
std::optional<SimilarityWitness> first_similarity(const ExchangeMatrix& b, const ExchangeMatrix& b2);

/// All sigma with permute_matrix(sigma, B(Q)) = B(Q), lexicographic.
std::vector<Permutation> quiver_automorphisms(const ValuedQuiver& q);
std::vector<Permutation> quiver_automorphisms(const ExchangeMatrix& b);

}  // namespace cluster
