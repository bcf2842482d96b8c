#include "cluster/exchange_map.hpp"

#include <unordered_set>

#include "cluster/errors.hpp"
#include "cluster/similarity.hpp"

namespace cluster {

namespace {

std::vector<LaurentPoly> target_images(const ExchangeMap& m) {
  std::vector<LaurentPoly> images;
  images.reserve(m.sigma.size());
  for (std::size_t i = 0; i < m.sigma.size(); ++i) images.push_back(m.target.cluster[m.sigma(i)]);
  return images;
}

void check_shapes(const ExchangeMap& m) {
  require_same_size(m.source.rank(), m.target.rank(), "exchange map");
  require_same_size(m.sigma.size(), m.source.rank(), "exchange map");
}

void require_complete(const MutationClassGraph& g, const char* what) {
  if (!g.complete()) {
    throw IncompleteGraph(std::string(what) + ": mutation class graph is truncated (" +
                          g.truncation_reason() + ")");
  }
}

}  // namespace

ExchangeMap exchange_map_between(const MutationClassGraph& g_source, std::size_t p,
                                 const MutationClassGraph& g_target, std::size_t q,
                                 const Permutation& sigma) {
  return ExchangeMap{g_source.seed(p), g_target.seed(q), sigma, g_source.word_to(p)};
}

std::optional<LaurentPoly> apply_map(const ExchangeMap& m, const LaurentPoly& f) {
  check_shapes(m);
  const auto images = target_images(m);
  return substitute(f, images);
}

std::optional<std::vector<LaurentPoly>> initial_images(const ExchangeMap& m) {
  check_shapes(m);
  // Walk back from the source seed in formal variables: the cluster reached is
  // the initial one, written in the source cluster variables.
  MutationWord back(m.source_word.rbegin(), m.source_word.rend());
  const Seed formal = apply_word(initial_seed(m.source.matrix), back);
  std::vector<LaurentPoly> out;
  out.reserve(formal.rank());
  for (const auto& t_in_source : formal.cluster) {
    auto image = apply_map(m, t_in_source);
    if (!image) return std::nullopt;
    out.push_back(std::move(*image));
  }
  return out;
}

std::optional<LaurentPoly> apply_to_ambient(const ExchangeMap& m, const LaurentPoly& z) {
  auto images = initial_images(m);
  if (!images) return std::nullopt;
  return substitute(z, *images);
}

bool satisfies_lemma_311(const ExchangeMap& m) {
  check_shapes(m);
  const Seed formal = initial_seed(m.source.matrix);
  for (std::size_t k = 0; k < m.source.rank(); ++k) {
    const LaurentPoly mutated_source = mutate_seed(formal, k).cluster[k];
    const auto image = apply_map(m, mutated_source);
    const std::size_t sk = m.sigma(k);
    const LaurentPoly mutated_target = mutate_seed(m.target, sk).cluster[sk];
    if (!image || !(*image == mutated_target)) return false;
  }
  return true;
}

bool is_cluster_isomorphism(const ExchangeMap& m) {
  check_shapes(m);
  return is_sigma_similar(m.source.matrix, m.target.matrix, m.sigma).has_value();
}

BruteForceVerdict verify_isomorphism_bruteforce(const ExchangeMap& m, const MutationClassGraph& g_source,
                                                const MutationClassGraph& g_target) {
  check_shapes(m);
  require_complete(g_source, "verify_isomorphism_bruteforce");
  require_complete(g_target, "verify_isomorphism_bruteforce");

  const auto images = initial_images(m);
  const MutationWord back(m.source_word.rbegin(), m.source_word.rend());
  for (std::size_t i = 0; i < g_source.size(); ++i) {
    // A walk from the source seed to seed i, and its sigma-image.
    MutationWord w = back;
    const MutationWord forward = g_source.word_to(i);
    w.insert(w.end(), forward.begin(), forward.end());
    MutationWord sw;
    sw.reserve(w.size());
    for (std::size_t k : w) sw.push_back(m.sigma(k));

    const Seed expected = apply_word(m.target, sw);
    const Seed& s = g_source.seed(i);
    for (std::size_t j = 0; j < s.rank(); ++j) {
      auto image = images ? substitute(s.cluster[j], *images) : std::nullopt;
      if (!image || !(*image == expected.cluster[m.sigma(j)])) return {false, w};
    }
  }
  return {true, std::nullopt};
}

bool is_variable_preserver(const ExchangeMap& m, const MutationClassGraph& g_source,
                           const MutationClassGraph& g_target) {
  check_shapes(m);
  require_complete(g_source, "is_variable_preserver");
  require_complete(g_target, "is_variable_preserver");
  const auto images = initial_images(m);
  if (!images) return false;
  const auto targets = cluster_variables(g_target);
  const std::unordered_set<LaurentPoly, LaurentHash> members(targets.begin(), targets.end());
  for (const auto& z : cluster_variables(g_source)) {
    const auto image = substitute(z, *images);
    if (!image || !members.contains(*image)) return false;
  }
  return true;
}

bool exchange_binomials_transport(const ExchangeMatrix& b, const ExchangeMatrix& b2,
                                  const Permutation& sigma) {
  require_same_size(b.rank(), b2.rank(), "exchange_binomials_transport");
  require_same_size(sigma.size(), b.rank(), "exchange_binomials_transport");
  const Seed p = initial_seed(b);
  const Seed p2 = initial_seed(b2);
  for (std::size_t k = 0; k < b.rank(); ++k) {
    if (!(permute_variables(sigma, exchange_binomial(p, k)) == exchange_binomial(p2, sigma(k)))) {
      return false;
    }
  }
  return true;
}

}  // namespace cluster
