#include <doctest.h>

#include "cluster/errors.hpp"
#include "cluster/parity.hpp"
#include "cluster/random.hpp"
#include "golden.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

using R = Justification::Reason;

const Justification* find_step(const ClosureProof& proof, std::size_t k, std::size_t i, std::size_t j) {
  for (const auto& s : proof) {
    if (s.k == k && s.i == i && s.j == j) return &s;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("parity of matrices") {
  const auto p = parity_of(parity_start());
  CHECK(p.even(0, 1));
  CHECK(p.even(0, 2));
  CHECK(p(1, 2) == Parity::Odd);
  CHECK(p.to_string() == "EEE/EEO/EOE");
  CHECK(parity_of(ExchangeMatrix::zero(3)) == ParityPattern(3));
  CHECK(parity_of(g2())(0, 1) == Parity::Odd);
  CHECK(parity_of(M({{0, 2}, {-1, 0}})).to_string() == "EE/OE");
}

TEST_CASE("pattern validation") {
  using P = Parity;
  CHECK_NOTHROW(ParityPattern::from_rows({{P::Even, P::Odd}, {P::Even, P::Even}}));
  CHECK_THROWS_AS(ParityPattern::from_rows({{P::Odd, P::Even}, {P::Even, P::Even}}), InvalidInput);
  CHECK_THROWS_AS(ParityPattern::from_rows({{P::Even}, {P::Even, P::Even}}), InvalidInput);
}

TEST_CASE("closure decisions") {
  const auto proof = is_closed(parity_of(parity_start()));
  REQUIRE(proof);
  CHECK(proof->size() == 3 * 6);
  const auto* s12 = find_step(*proof, 2, 0, 1);
  REQUIRE(s12);
  CHECK(s12->reason == R::LeftEven);
  CHECK(s12->describe() == "(1,3) even");
  const auto* s13 = find_step(*proof, 1, 0, 2);
  REQUIRE(s13);
  CHECK(s13->describe() == "(1,2) even");
  const auto* s23 = find_step(*proof, 0, 1, 2);
  REQUIRE(s23);
  CHECK(s23->describe() == "(2,1) even");
  CHECK(find_step(*proof, 0, 0, 1)->reason == R::Negated);

  CHECK(is_closed(ParityPattern(4)));
  CHECK_FALSE(first_unclosed_triple(ParityPattern(4)));

  const auto odd = parity_of(M({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}));
  CHECK_FALSE(is_closed(odd));
  const auto triple = first_unclosed_triple(odd);
  REQUIRE(triple);
  CHECK(triple->k == 0);
  CHECK(triple->i == 1);
  CHECK(triple->j == 2);
}

TEST_CASE("unclosed patterns really break") {
  // Same odd pattern, two sign choices: one mutation changes a parity, the other does not.
  const auto b = M({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
  const auto c = M({{0, -1, -1}, {1, 0, 1}, {1, -1, 0}});
  CHECK(parity_of(b) == parity_of(c));
  CHECK(mutate_matrix(b, 1)(0, 2) == 2);
  CHECK(parity_of(mutate_matrix(b, 1)) != parity_of(b));
  CHECK(mutate_matrix(c, 1)(0, 2) == -1);
}

TEST_CASE("certificates") {
  const auto cert = certify_unreachable(parity_start(), parity_target());
  REQUIRE(cert);
  CHECK(cert->start_check);
  CHECK(cert->target_check);
  CHECK(verify_certificate(*cert));
  CHECK(cert->pattern(1, 2) == Parity::Odd);
  CHECK(parity_of(parity_target()).even(1, 2));

  CHECK_FALSE(certify_unreachable(parity_start(), parity_start()));
  CHECK_FALSE(certify_unreachable(b2(), -b2()));
  CHECK_THROWS_AS(certify_unreachable(parity_start(), b2()), SizeMismatch);

  auto forged = *cert;
  forged.closure_proof.pop_back();
  CHECK_FALSE(verify_certificate(forged));
  forged = *cert;
  forged.closure_proof[0].reason = R::LeftEven;
  CHECK_FALSE(verify_certificate(forged));
  forged = *cert;
  forged.target = parity_start();
  CHECK_FALSE(verify_certificate(forged));
}

TEST_CASE("bounded reachability") {
  const auto one = bounded_reachability(parity_start(), mutate_matrix(parity_start(), 1), 4, 1000);
  CHECK(one.reached);
  CHECK(one.word == MutationWord{1});
  const auto zero = bounded_reachability(parity_start(), parity_start(), 1, 1);
  CHECK(zero.reached);
  CHECK(zero.word.empty());

  const auto golden = load_golden("parity_bfs.json");
  const auto deep = bounded_reachability(parity_start(), parity_target(), golden["depth"].get<std::size_t>(), 1000000);
  CHECK_FALSE(deep.reached);
  CHECK(deep.states == golden["states"].get<std::size_t>());
  CHECK_FALSE(deep.exhausted);

  const auto rank2 = bounded_reachability(b2(), -b2(), 3, 100);
  CHECK(rank2.reached);
  CHECK(rank2.word == MutationWord{0});
  const auto closed = bounded_reachability(b2(), M({{0, 3}, {-1, 0}}), 5, 100);
  CHECK_FALSE(closed.reached);
  CHECK(closed.exhausted);
  CHECK(closed.states == 2);
  const auto capped = bounded_reachability(parity_start(), parity_target(), 64, 10);
  CHECK(capped.states == 10);
  CHECK_FALSE(capped.exhausted);

  CHECK_THROWS_AS(bounded_reachability(parity_start(), parity_start(), 0, 10), InvalidInput);
  CHECK_THROWS_AS(bounded_reachability(parity_start(), b2(), 3, 10), SizeMismatch);
}

TEST_CASE("closure soundness on random matrices") {
  Rng rng(51);
  std::size_t closed = 0;
  for (int trial = 0; trial < 20000 && closed < 2000; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 5);
    const auto b = random_skew_symmetrizable(rng, n, 9);
    const auto p = parity_of(b);
    for (std::size_t k = 0; k < n; ++k) {
      const auto m = parity_of(mutate_matrix(b, k));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(m(i, k) == p(i, k));
        CHECK(m(k, i) == p(k, i));
      }
    }
    if (!is_closed(p)) continue;
    ++closed;
    for (std::size_t k = 0; k < n; ++k) CHECK(p.matches(mutate_matrix(b, k)));
  }
  CHECK(closed == 2000);
}

TEST_CASE("certificates never contradict the search") {
  Rng rng(52);
  std::size_t certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + uniform_index(rng, 3);
    const auto start = random_skew_symmetrizable(rng, n, 3);
    const auto target = random_skew_symmetrizable(rng, n, 3);
    const auto cert = certify_unreachable(start, target);
    if (!cert) continue;
    ++certified;
    CHECK(verify_certificate(*cert));
    CHECK_FALSE(bounded_reachability(start, target, 5, 2000).reached);
  }
  CHECK(certified > 20);
}
