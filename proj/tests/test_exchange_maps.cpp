#include <doctest.h>

#include "cluster/automorphism_group.hpp"
#include "cluster/errors.hpp"
#include "cluster/exchange_map.hpp"
#include "cluster/random.hpp"
#include "cluster/similarity.hpp"
#include "golden.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

const MutationClassGraph& graph_of(const ExchangeMatrix& b) {
  static std::vector<std::pair<ExchangeMatrix, MutationClassGraph>> cache;
  for (const auto& [key, g] : cache) {
    if (key == b) return g;
  }
  cache.emplace_back(b, explore(initial_seed(b)));
  return cache.back().second;
}

}  // namespace

TEST_CASE("applying exchange maps") {
  const auto& g = graph_of(a2());
  const auto id = Permutation::identity(2);
  const auto swap = Permutation::transposition(2, 0, 1);
  const auto f = mul(c(2, 1) + t(2, 1) + t(2, 2), mono({-1, -1}));
  CHECK(apply_map(exchange_map_between(g, 0, g, 0, id), f) == f);
  CHECK(apply_map(exchange_map_between(g, 0, g, 0, swap), t(2, 1)) == t(2, 2));
  const auto one = *g.neighbor(0, 0);
  CHECK(apply_map(exchange_map_between(g, 0, g, one, id), t(2, 1)) == mul(c(2, 1) + t(2, 2), mono({-1, 0})));
  const ExchangeMap bad{initial_seed(a2()), initial_seed(a3()), id, {}};
  CHECK_THROWS_AS(apply_map(bad, t(2, 1)), SizeMismatch);
}

TEST_CASE("maps from non-initial seeds act on the ambient field") {
  const auto& g = graph_of(a2());
  // Source seed at [1]; its formal variable x1 means (1 + t2)/t1.
  const auto p = *g.neighbor(0, 0);
  const auto m = exchange_map_between(g, p, g, p, Permutation::identity(2));
  const auto images = initial_images(m);
  REQUIRE(images);
  CHECK((*images)[0] == t(2, 1));
  CHECK((*images)[1] == t(2, 2));
  CHECK(apply_to_ambient(m, t(2, 1)) == t(2, 1));
}

TEST_CASE("exchange criterion on small maps") {
  const auto& g = graph_of(a2());
  CHECK(satisfies_lemma_311(exchange_map_between(g, 0, g, 0, Permutation::identity(2))));
  CHECK(satisfies_lemma_311(exchange_map_between(g, 0, g, 0, Permutation::transposition(2, 0, 1))));
  const Seed relabeled{initial_seed(parity_start()).cluster, parity_target()};
  CHECK_FALSE(satisfies_lemma_311(ExchangeMap{initial_seed(parity_start()), relabeled, Permutation::identity(3), {}}));
}

TEST_CASE("exchange criterion matches similarity") {
  const auto& g = graph_of(b2());
  for (std::size_t p = 0; p < g.size(); ++p) {
    for (std::size_t q = 0; q < g.size(); ++q) {
      for (const auto& s : Permutation::all(2)) {
        const auto m = exchange_map_between(g, p, g, q, s);
        CHECK(satisfies_lemma_311(m) == is_sigma_similar(g.seed(p).matrix, g.seed(q).matrix, s).has_value());
      }
    }
  }
  Rng rng(41);
  const auto& g3 = graph_of(a3());
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = uniform_index(rng, g3.size());
    const auto q = uniform_index(rng, g3.size());
    const auto s = random_permutation(rng, 3);
    const auto m = exchange_map_between(g3, p, g3, q, s);
    CHECK(satisfies_lemma_311(m) == is_sigma_similar(g3.seed(p).matrix, g3.seed(q).matrix, s).has_value());
  }
}

TEST_CASE("cluster isomorphism by matrices") {
  const auto& a = graph_of(a2());
  const auto& b = graph_of(b2());
  const auto swap = Permutation::transposition(2, 0, 1);
  CHECK(is_cluster_isomorphism(exchange_map_between(a, 0, a, 0, Permutation::identity(2))));
  CHECK(is_cluster_isomorphism(exchange_map_between(a, 0, a, 0, swap)));
  CHECK_FALSE(is_cluster_isomorphism(exchange_map_between(b, 0, b, 0, swap)));
}

TEST_CASE("brute force isomorphism check") {
  const auto& a = graph_of(a2());
  const auto& b = graph_of(b2());
  const auto swap = Permutation::transposition(2, 0, 1);
  CHECK(verify_isomorphism_bruteforce(exchange_map_between(a, 0, a, 0, Permutation::identity(2)), a, a).holds);
  CHECK(verify_isomorphism_bruteforce(exchange_map_between(a, 0, a, 0, swap), a, a).holds);
  const auto corrupted = verify_isomorphism_bruteforce(exchange_map_between(b, 0, b, 0, swap), b, b);
  CHECK_FALSE(corrupted.holds);
  REQUIRE(corrupted.witness);
  CHECK(corrupted.witness->size() <= 1);

  const auto truncated = explore(initial_seed(markov()), ExploreLimits{10, 64});
  CHECK_THROWS_AS(verify_isomorphism_bruteforce(exchange_map_between(truncated, 0, truncated, 0,
                                                                     Permutation::identity(3)),
                                                truncated, truncated),
                  IncompleteGraph);
}

TEST_CASE("three-way equivalence on A2 and B2") {
  for (const auto* mat : {&a2(), &b2()}) {
    const auto& g = graph_of(*mat);
    for (std::size_t p = 0; p < g.size(); ++p) {
      for (std::size_t q = 0; q < g.size(); ++q) {
        for (const auto& s : Permutation::all(2)) {
          const auto m = exchange_map_between(g, p, g, q, s);
          const bool iso = verify_isomorphism_bruteforce(m, g, g).holds;
          CHECK(is_cluster_isomorphism(m) == iso);
          CHECK(is_variable_preserver(m, g, g) == iso);
        }
      }
    }
  }
  const auto& b = graph_of(b2());
  CHECK(is_variable_preserver(exchange_map_between(graph_of(a2()), 0, graph_of(a2()), 0, Permutation::identity(2)),
                              graph_of(a2()), graph_of(a2())));
  CHECK_FALSE(is_variable_preserver(exchange_map_between(b, 0, b, 0, Permutation::transposition(2, 0, 1)), b, b));
}

TEST_CASE("isomorphism check on A3 samples") {
  Rng rng(42);
  const auto& g = graph_of(a3());
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = uniform_index(rng, g.size());
    const auto q = uniform_index(rng, g.size());
    const auto s = random_permutation(rng, 3);
    const auto m = exchange_map_between(g, p, g, q, s);
    CHECK(is_cluster_isomorphism(m) == verify_isomorphism_bruteforce(m, g, g).holds);
  }
}

TEST_CASE("similar seeds stay similar along words") {
  Rng rng(43);
  for (const auto* mat : {&a3(), &g2(), &parity_start(), &markov()}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = mat->rank();
      const auto p = apply_word(initial_seed(*mat), random_word(rng, n, uniform_index(rng, 4)));
      const auto s = random_permutation(rng, n);
      const auto q = relabel_seed(s, p);
      const auto w = random_word(rng, n, uniform_index(rng, 7));
      MutationWord sw;
      for (std::size_t k : w) sw.push_back(s(k));
      const auto pw = apply_word(p, w);
      const auto qw = apply_word(q, sw);
      CHECK(is_sigma_similar(pw.matrix, qw.matrix, s));
      const ExchangeMap m{p, q, s, {}};
      const auto formal = apply_word(initial_seed(p.matrix), w);
      for (std::size_t i = 0; i < n; ++i) CHECK(apply_map(m, formal.cluster[i]) == qw.cluster[s(i)]);
    }
  }
}

TEST_CASE("exchange binomials transport between similar matrices") {
  Rng rng(44);
  int separated = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + uniform_index(rng, 3);
    const auto b = random_skew_symmetrizable(rng, n, 4);
    const auto s = random_permutation(rng, n);
    const auto moved = permute_matrix(s, b);
    CHECK(exchange_binomials_transport(b, moved, s));
    CHECK(exchange_binomials_transport(b, -moved, s));
    const auto other = random_skew_symmetrizable(rng, n, 4);
    if (!is_sigma_similar(b, other, s)) {
      ++separated;
      CHECK_FALSE(exchange_binomials_transport(b, other, s));
    }
  }
  CHECK(separated > 0);
}

TEST_CASE("automorphism groups of rank 2 and rank 1") {
  const auto b = automorphism_group(ValuedQuiver(2, arrows({{1, 2, 2, 1}})));
  CHECK(b.order() == 6);
  const auto rb = detect_relations(b);
  for (const char* r : {"T1^2 = 1", "T2^2 = 1", "(T1T2)^3 = 1"}) {
    CHECK(std::find(rb.begin(), rb.end(), r) != rb.end());
  }
  const auto g = automorphism_group(quiver_from_matrix(g2()));
  CHECK(g.order() == 8);
  const auto rg = detect_relations(g);
  CHECK(std::find(rg.begin(), rg.end(), "(T1T2)^4 = 1") != rg.end());

  const auto a = automorphism_group(quiver_from_matrix(a2()));
  CHECK(a.order() == 10);

  const auto one = automorphism_group(ValuedQuiver(1, {}));
  REQUIRE(one.order() == 2);
  std::vector<LaurentPoly> images;
  for (const auto& e : one.elements) images.push_back(e.images[0]);
  CHECK(std::find(images.begin(), images.end(), t(1, 1)) != images.end());
  CHECK(std::find(images.begin(), images.end(), mono({-1}, 2)) != images.end());
}

TEST_CASE("group tables satisfy the group axioms") {
  for (const auto* mat : {&a2(), &b2(), &g2(), &a3()}) {
    const auto t = automorphism_group(graph_of(*mat));
    const std::size_t n = t.order();
    REQUIRE(t.composition.size() == n);
    CHECK(t.elements[t.identity].images == initial_seed(*mat).cluster);
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(t.composition[t.identity][a] == a);
      CHECK(t.composition[a][t.identity] == a);
      CHECK(t.composition[a][t.inverse(a)] == t.identity);
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; c += 3) {
          CHECK(t.composition[t.composition[a][b]][c] == t.composition[a][t.composition[b][c]]);
        }
      }
    }
  }
  CHECK(automorphism_group(graph_of(a3())).order() == 12);
}

TEST_CASE("automorphism group errors") {
  CHECK_THROWS_AS(automorphism_group(quiver_from_matrix(markov()), ExploreLimits{30, 64}), InfiniteOrTruncatedClass);
  CHECK_THROWS_AS(automorphism_group(ValuedQuiver(7, {}), ExploreLimits{30, 64}), RankTooLarge);
}

TEST_CASE("similarity classes") {
  for (const auto* mat : {&a2(), &b2(), &g2()}) CHECK(similarity_classes(graph_of(*mat)).size() == 1);
  CHECK(similarity_classes(explore(initial_seed(markov()), ExploreLimits{60, 64})).size() == 1);
  const auto golden = load_golden("a3_similarity_partition.json").get<std::vector<std::vector<std::size_t>>>();
  CHECK(similarity_classes(graph_of(a3())) == golden);
}
