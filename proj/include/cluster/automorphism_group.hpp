#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cluster/laurent.hpp"
#include "cluster/mutation_class.hpp"
#include "cluster/valued_quiver.hpp"

namespace cluster {

/// A cluster automorphism, recorded by the images of t_1..t_n.
struct AutGroupElement {
  std::vector<LaurentPoly> images;
  friend bool operator==(const AutGroupElement&, const AutGroupElement&) = default;
};

struct NamedGenerator {
  std::string name;  // "T1", "T2", ...
  std::size_t element;
};

struct GroupTable {
  std::vector<AutGroupElement> elements;
  /// composition[a][b] is the index of a o b (b applied first).
  std::vector<std::vector<std::size_t>> composition;
  std::size_t identity = 0;
  /// T_k: the exchange map from the initial seed to its mu_k neighbour with
  /// sigma = id, present whenever those seeds are id-similar.
  std::vector<NamedGenerator> generators;

  std::size_t order() const { return elements.size(); }
  std::size_t inverse(std::size_t a) const;
  /// Smallest m >= 1 with a^m = identity.
  std::size_t element_order(std::size_t a) const;
};

/// "T1^2 = 1" for each named involution and "(T1T2)^m = 1" for each ordered
/// pair of distinct named generators whose product has order m <= 12.
std::vector<std::string> detect_relations(const GroupTable& g);

/// Largest rank accepted by automorphism_group.
inline constexpr std::size_t kMaxGroupRank = 6;

/// All T_{p0 p', sigma} with p0 the initial seed and p' sigma-similar to it,
/// deduplicated and closed under composition. Throws RankTooLarge or
/// InfiniteOrTruncatedClass.
GroupTable automorphism_group(const ValuedQuiver& q, const ExploreLimits& limits = {});
GroupTable automorphism_group(const MutationClassGraph& g);

/// Partition of seed indices under "exists sigma, epsilon" similarity of the
/// exchange matrices. Blocks and their members are in increasing index order.
std::vector<std::vector<std::size_t>> similarity_classes(const MutationClassGraph& g);

}  // namespace cluster
