#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/laurent.hpp"
#include "cluster/mutation_class.hpp"
#include "cluster/permutation.hpp"
#include "cluster/seed.hpp"

namespace cluster {

/// The field automorphism T_{pp',sigma} induced by x_i -> y_sigma(i).
///
/// Both seeds are expanded in the ambient variables t. `source_word` is a
/// mutation word taking the initial seed of the source class to `source`; it is
/// what lets the map act on elements written in t rather than in the source
/// cluster. It is empty when the source is the initial seed.
struct ExchangeMap {
  Seed source;
  Seed target;
  Permutation sigma;
  MutationWord source_word;
};

/// Map between seed `p` of `g_source` and seed `q` of `g_target`.
ExchangeMap exchange_map_between(const MutationClassGraph& g_source, std::size_t p,
                                 const MutationClassGraph& g_target, std::size_t q,
                                 const Permutation& sigma);

/// f is written in the source cluster variables (x_1..x_n as polynomial
/// variables). Empty when the image is not a Laurent polynomial in t.
std::optional<LaurentPoly> apply_map(const ExchangeMap& m, const LaurentPoly& f);

/// Images of the ambient variables t_1..t_n under the map, or empty if one of
/// them is not a Laurent polynomial.
std::optional<std::vector<LaurentPoly>> initial_images(const ExchangeMap& m);

/// The map applied to an element written in the ambient variables t.
std::optional<LaurentPoly> apply_to_ambient(const ExchangeMap& m, const LaurentPoly& z);

/// For every k, the image of the k-th mutated source variable equals the
/// sigma(k)-th mutated target variable.
bool satisfies_lemma_311(const ExchangeMap& m);

/// Decided on the exchange matrices: the seeds are sigma-similar.
bool is_cluster_isomorphism(const ExchangeMap& m);

struct BruteForceVerdict {
  bool holds = false;
  /// First failing word w, read from the source seed.
  std::optional<MutationWord> witness;
};

/// Independent check by words: for every seed of g_source, reached from the
/// source seed by some w, the image of its cluster is exactly the cluster at
/// sigma(w) from the target, slot i going to slot sigma(i). Throws
/// IncompleteGraph if either graph is truncated.
BruteForceVerdict verify_isomorphism_bruteforce(const ExchangeMap& m, const MutationClassGraph& g_source,
                                                const MutationClassGraph& g_target);

/// Every source cluster variable lands on a target cluster variable. Throws
/// IncompleteGraph if either graph is truncated.
bool is_variable_preserver(const ExchangeMap& m, const MutationClassGraph& g_source,
                           const MutationClassGraph& g_target);

/// Exchange binomials in formal variables agree under index transport:
/// permute_variables(sigma, f_{B,k}) = f_{B',sigma(k)} for all k.
bool exchange_binomials_transport(const ExchangeMatrix& b, const ExchangeMatrix& b2,
                                  const Permutation& sigma);

}  // namespace cluster
