#include "cluster/automorphism_group.hpp"

#include <unordered_map>

#include "cluster/errors.hpp"
#include "cluster/similarity.hpp"

namespace cluster {

namespace {

struct ElementHash {
  std::size_t operator()(const AutGroupElement& e) const {
    std::size_t h = e.images.size();
    for (const auto& x : e.images) hash_combine(h, x.hash());
    return h;
  }
};

/// (a o b)(t_j) = a(b(t_j)).
AutGroupElement compose(const AutGroupElement& a, const AutGroupElement& b) {
  AutGroupElement out;
  out.images.reserve(b.images.size());
  for (const auto& x : b.images) {
    auto image = substitute(x, a.images);
    if (!image) throw LaurentPhenomenonViolation("composition of cluster automorphisms left the Laurent ring");
    out.images.push_back(std::move(*image));
  }
  return out;
}

constexpr std::size_t kMaxGroupOrder = 100000;

}  // namespace

std::size_t GroupTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b) {
    if (composition[a][b] == identity) return b;
  }
  throw Error("group table has no inverse for element " + std::to_string(a));
}

std::size_t GroupTable::element_order(std::size_t a) const {
  std::size_t power = a;
  for (std::size_t m = 1; m <= order(); ++m) {
    if (power == identity) return m;
    power = composition[a][power];
  }
  throw Error("element " + std::to_string(a) + " has no finite order in the table");
}

std::vector<std::string> detect_relations(const GroupTable& g) {
  std::vector<std::string> out;
  for (const auto& gen : g.generators) {
    if (g.element_order(gen.element) == 2) out.push_back(gen.name + "^2 = 1");
  }
  for (const auto& a : g.generators) {
    for (const auto& b : g.generators) {
      if (a.element == b.element) continue;
      const std::size_t m = g.element_order(g.composition[a.element][b.element]);
      if (m <= 12) out.push_back("(" + a.name + b.name + ")^" + std::to_string(m) + " = 1");
    }
  }
  return out;
}

GroupTable automorphism_group(const MutationClassGraph& g) {
  if (!g.complete()) {
    throw InfiniteOrTruncatedClass("mutation class did not close within limits (" +
                                   g.truncation_reason() + ")");
  }
  const std::size_t n = g.rank();
  if (n > kMaxGroupRank) {
    throw RankTooLarge("automorphism groups limited to rank " + std::to_string(kMaxGroupRank));
  }

  GroupTable table;
  std::unordered_map<AutGroupElement, std::size_t, ElementHash> index;
  auto intern = [&](AutGroupElement e) {
    auto [it, inserted] = index.try_emplace(e, table.elements.size());
    if (inserted) {
      if (table.elements.size() >= kMaxGroupOrder) {
        throw InfiniteOrTruncatedClass("automorphism group exceeds " + std::to_string(kMaxGroupOrder) +
                                       " elements");
      }
      table.elements.push_back(std::move(e));
    }
    return it->second;
  };

  // With p = initial, T(t_i) = y_sigma(i) directly.
  const ExchangeMatrix& b0 = g.seed(0).matrix;
  for (const Seed& target : g.seeds()) {
    for (const auto& w : find_similarities(b0, target.matrix)) {
      AutGroupElement e;
      for (std::size_t i = 0; i < n; ++i) e.images.push_back(target.cluster[w.sigma(i)]);
      intern(std::move(e));
    }
  }
  table.identity = index.at(AutGroupElement{g.seed(0).cluster});

  for (std::size_t k = 0; k < n; ++k) {
    const auto j = g.neighbor(0, k);
    if (j && is_sigma_similar(b0, g.seed(*j).matrix, Permutation::identity(n))) {
      table.generators.push_back({"T" + std::to_string(k + 1), index.at(AutGroupElement{g.seed(*j).cluster})});
    }
  }

  // Close under composition; rows are filled as new elements appear.
  for (std::size_t a = 0; a < table.elements.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const std::size_t ab = intern(compose(table.elements[a], table.elements[b]));
      const std::size_t ba = intern(compose(table.elements[b], table.elements[a]));
      if (table.composition.size() < table.elements.size()) table.composition.resize(table.elements.size());
      for (auto& row : table.composition) row.resize(table.elements.size(), 0);
      table.composition[a][b] = ab;
      table.composition[b][a] = ba;
    }
  }
  table.composition.resize(table.elements.size());
  for (auto& row : table.composition) row.resize(table.elements.size(), 0);
  return table;
}

GroupTable automorphism_group(const ValuedQuiver& q, const ExploreLimits& limits) {
  if (q.rank() > kMaxGroupRank) {
    throw RankTooLarge("automorphism groups limited to rank " + std::to_string(kMaxGroupRank));
  }
  return automorphism_group(explore(q, limits));
}

std::vector<std::vector<std::size_t>> similarity_classes(const MutationClassGraph& g) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool placed = false;
    for (auto& block : blocks) {
      if (first_similarity(g.seed(block.front()).matrix, g.seed(i).matrix)) {
        block.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) blocks.push_back({i});
  }
  return blocks;
}

}  // namespace cluster
