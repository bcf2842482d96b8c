#include "cluster/similarity.hpp"

#include "cluster/errors.hpp"

namespace cluster {

namespace {

bool matches(const ExchangeMatrix& b, const ExchangeMatrix& b2, const std::vector<std::size_t>& sigma,
             int epsilon, std::size_t i, std::size_t j) {
  const Integer& target = b2(sigma[i], sigma[j]);
  return epsilon > 0 ? target == b(i, j) : target == -b(i, j);
}

/// Depth-first extension of a partial sigma in increasing image order, so the
/// completed permutations appear lexicographically.
class SimilaritySearch {
 public:
  SimilaritySearch(const ExchangeMatrix& b, const ExchangeMatrix& b2, int epsilon, bool first_only)
      : b_(b), b2_(b2), epsilon_(epsilon), first_only_(first_only), n_(b.rank()),
        used_(n_, false), sigma_(n_) {}

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  bool extend(std::size_t i) {
    if (i == n_) {
      found_.emplace_back(sigma_);
      return first_only_;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      sigma_[i] = v;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        ok = matches(b_, b2_, sigma_, epsilon_, i, j) && matches(b_, b2_, sigma_, epsilon_, j, i);
      }
      if (!ok) continue;
      used_[v] = true;
      const bool stop = extend(i + 1);
      used_[v] = false;
      if (stop) return true;
    }
    return false;
  }

  const ExchangeMatrix& b_;
  const ExchangeMatrix& b2_;
  int epsilon_;
  bool first_only_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<std::size_t> sigma_;
  std::vector<Permutation> found_;
};

std::vector<SimilarityWitness> merge_by_sigma(std::vector<Permutation> plus,
                                              std::vector<Permutation> minus) {
  std::vector<SimilarityWitness> out;
  std::size_t a = 0;
  std::size_t c = 0;
  while (a < plus.size() || c < minus.size()) {
    if (c == minus.size() || (a < plus.size() && plus[a] <= minus[c])) {
      if (c < minus.size() && plus[a] == minus[c]) ++c;  // B = 0: keep +1 only
      out.push_back({std::move(plus[a++]), 1});
    } else {
      out.push_back({std::move(minus[c++]), -1});
    }
  }
  return out;
}

}  // namespace

std::optional<SimilarityWitness> is_sigma_similar(const ExchangeMatrix& b, const ExchangeMatrix& b2,
                                                  const Permutation& sigma) {
  require_same_size(b.rank(), b2.rank(), "is_sigma_similar");
  require_same_size(sigma.size(), b.rank(), "is_sigma_similar");
  for (int epsilon : {1, -1}) {
    bool ok = true;
    for (std::size_t i = 0; i < b.rank() && ok; ++i) {
      for (std::size_t j = 0; j < b.rank() && ok; ++j) {
        ok = matches(b, b2, sigma.images(), epsilon, i, j);
      }
    }
    if (ok) return SimilarityWitness{sigma, epsilon};
  }
  return std::nullopt;
}

std::optional<SimilarityWitness> is_sigma_similar(const ValuedQuiver& q, const ValuedQuiver& q2,
                                                  const Permutation& sigma) {
  return is_sigma_similar(matrix_from_quiver(q), matrix_from_quiver(q2), sigma);
}

std::vector<SimilarityWitness> find_similarities(const ExchangeMatrix& b, const ExchangeMatrix& b2) {
  require_same_size(b.rank(), b2.rank(), "find_similarities");
  if (b.rank() > kMaxSearchRank) {
    throw RankTooLarge("similarity search limited to rank " + std::to_string(kMaxSearchRank));
  }
  return merge_by_sigma(SimilaritySearch(b, b2, 1, false).run(),
                        SimilaritySearch(b, b2, -1, false).run());
}

std::vector<SimilarityWitness> find_similarities(const ValuedQuiver& q, const ValuedQuiver& q2) {
  return find_similarities(matrix_from_quiver(q), matrix_from_quiver(q2));
}

std::optional<SimilarityWitness> first_similarity(const ExchangeMatrix& b, const ExchangeMatrix& b2) {
  require_same_size(b.rank(), b2.rank(), "first_similarity");
  auto plus = SimilaritySearch(b, b2, 1, true).run();
  auto minus = SimilaritySearch(b, b2, -1, true).run();
  if (plus.empty() && minus.empty()) return std::nullopt;
  if (minus.empty() || (!plus.empty() && plus.front() <= minus.front())) {
    return SimilarityWitness{plus.front(), 1};
  }
  return SimilarityWitness{minus.front(), -1};
}

std::vector<Permutation> quiver_automorphisms(const ExchangeMatrix& b) {
  if (b.rank() > kMaxSearchRank) {
    throw RankTooLarge("automorphism search limited to rank " + std::to_string(kMaxSearchRank));
  }
  return SimilaritySearch(b, b, 1, false).run();
}

std::vector<Permutation> quiver_automorphisms(const ValuedQuiver& q) {
  return quiver_automorphisms(matrix_from_quiver(q));
}

}  // namespace cluster
