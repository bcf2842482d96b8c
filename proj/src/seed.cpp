#include "cluster/seed.hpp"

#include "cluster/errors.hpp"

namespace cluster {

std::string word_to_string(const MutationWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i] + 1);
  }
  return out + "]";
}

std::size_t Seed::hash() const {
  std::size_t h = matrix.hash();
  for (const auto& x : cluster) hash_combine(h, x.hash());
  return h;
}

Seed initial_seed(const ExchangeMatrix& b) {
  Seed s{{}, b};
  s.cluster.reserve(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) s.cluster.push_back(LaurentPoly::variable(b.rank(), i));
  return s;
}

Seed initial_seed(const ValuedQuiver& q) { return initial_seed(matrix_from_quiver(q)); }

LaurentPoly exchange_binomial(const Seed& p, std::size_t k) {
  require_index(k, p.rank(), "exchange_binomial");
  const std::size_t m = p.cluster[k].variables();
  LaurentPoly in = LaurentPoly::constant(m, 1);
  LaurentPoly out = LaurentPoly::constant(m, 1);
  for (std::size_t i = 0; i < p.rank(); ++i) {
    const Integer& b = p.matrix(i, k);
    if (b > 0) {
      in = in * pow(p.cluster[i], static_cast<unsigned>(to_exponent(b)));
    } else if (b < 0) {
      out = out * pow(p.cluster[i], static_cast<unsigned>(to_exponent(-b)));
    }
  }
  return in + out;
}

Seed mutate_seed(const Seed& p, std::size_t k) {
  require_index(k, p.rank(), "mutate_seed");
  auto exchanged = exact_divide(exchange_binomial(p, k), p.cluster[k]);
  if (!exchanged) {
    throw LaurentPhenomenonViolation("exchange relation in direction " + std::to_string(k + 1) +
                                     " has no Laurent solution");
  }
  Seed out{p.cluster, mutate_matrix(p.matrix, k)};
  out.cluster[k] = std::move(*exchanged);
  return out;
}

Seed apply_word(Seed p, const MutationWord& w) {
  for (std::size_t k : w) p = mutate_seed(p, k);
  return p;
}

Seed apply_automorphism_to_seed(const Permutation& sigma, const Seed& q) {
  require_same_size(sigma.size(), q.rank(), "apply_automorphism_to_seed");
  Seed out{{}, permute_matrix(sigma, q.matrix)};
  out.cluster.reserve(q.rank());
  for (const auto& y : q.cluster) out.cluster.push_back(permute_variables(sigma, y));
  return out;
}

Seed relabel_seed(const Permutation& sigma, const Seed& p) {
  require_same_size(sigma.size(), p.rank(), "relabel_seed");
  Seed out{p.cluster, permute_matrix(sigma, p.matrix)};
  for (std::size_t i = 0; i < p.rank(); ++i) out.cluster[sigma(i)] = p.cluster[i];
  return out;
}

}  // namespace cluster
