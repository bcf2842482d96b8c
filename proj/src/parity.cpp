#include "cluster/parity.hpp"

#include <deque>
#include <unordered_map>

#include "cluster/errors.hpp"

namespace cluster {

ParityPattern ParityPattern::from_rows(const std::vector<std::vector<Parity>>& rows) {
  const std::size_t n = rows.size();
  ParityPattern p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidInput("parity pattern is not square");
    for (std::size_t j = 0; j < n; ++j) p.odd_[i * n + j] = rows[i][j] == Parity::Odd;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.even(i, i)) throw InvalidInput("parity pattern has an odd diagonal entry");
  }
  return p;
}

bool ParityPattern::matches(const ExchangeMatrix& b) const { return parity_of(b) == *this; }

std::string ParityPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += '/';
    for (std::size_t j = 0; j < n_; ++j) out += even(i, j) ? 'E' : 'O';
  }
  return out;
}

ParityPattern parity_of(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  ParityPattern p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.odd_[i * n + j] = mpz_odd_p(b(i, j).get_mpz_t()) != 0;
  }
  return p;
}

std::string Justification::describe() const {
  switch (reason) {
    case Reason::Negated: return "negated";
    case Reason::LeftEven: return "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") even";
    case Reason::RightEven: return "(" + std::to_string(k + 1) + "," + std::to_string(j + 1) + ") even";
  }
  return {};
}

std::optional<UnclosedTriple> first_unclosed_triple(const ParityPattern& p) {
  const std::size_t n = p.rank();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == k || j == k || i == j) continue;
        if (!p.even(i, k) && !p.even(k, j)) return UnclosedTriple{k, i, j};
      }
    }
  }
  return std::nullopt;
}

std::optional<ClosureProof> is_closed(const ParityPattern& p) {
  using R = Justification::Reason;
  const std::size_t n = p.rank();
  ClosureProof proof;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (i == k || j == k) {
          proof.push_back({k, i, j, R::Negated});
        } else if (p.even(i, k)) {
          proof.push_back({k, i, j, R::LeftEven});
        } else if (p.even(k, j)) {
          proof.push_back({k, i, j, R::RightEven});
        } else {
          return std::nullopt;
        }
      }
    }
  }
  return proof;
}

bool verify_certificate(const UnreachabilityCertificate& c) {
  using R = Justification::Reason;
  const ParityPattern& p = c.pattern;
  const std::size_t n = p.rank();
  if (c.start.rank() != n || c.target.rank() != n) return false;
  if (!c.start_check || !c.target_check) return false;
  if (!p.matches(c.start) || p.matches(c.target)) return false;

  std::vector<bool> covered(n * n * n, false);
  for (const auto& s : c.closure_proof) {
    if (s.k >= n || s.i >= n || s.j >= n || s.i == s.j) return false;
    bool ok = false;
    switch (s.reason) {
      case R::Negated: ok = s.i == s.k || s.j == s.k; break;
      case R::LeftEven: ok = s.i != s.k && s.j != s.k && p.even(s.i, s.k); break;
      case R::RightEven: ok = s.i != s.k && s.j != s.k && p.even(s.k, s.j); break;
    }
    if (!ok) return false;
    covered[(s.k * n + s.i) * n + s.j] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && !covered[(k * n + i) * n + j]) return false;
      }
    }
  }
  return true;
}

std::optional<UnreachabilityCertificate> certify_unreachable(const ExchangeMatrix& start,
                                                             const ExchangeMatrix& target) {
  require_same_size(start.rank(), target.rank(), "certify_unreachable");
  ParityPattern pattern = parity_of(start);
  if (pattern == parity_of(target)) return std::nullopt;
  auto proof = is_closed(pattern);
  if (!proof) return std::nullopt;
  return UnreachabilityCertificate{std::move(pattern), start, target, true, true, std::move(*proof)};
}

ReachabilityResult bounded_reachability(const ExchangeMatrix& start, const ExchangeMatrix& target,
                                        std::size_t max_depth, std::size_t max_states) {
  require_same_size(start.rank(), target.rank(), "bounded_reachability");
  if (max_depth == 0 || max_states == 0) throw InvalidInput("reachability limits must be positive");

  struct Node {
    std::size_t parent;
    std::size_t direction;
    std::size_t depth;
  };
  std::vector<ExchangeMatrix> states{start};
  std::vector<Node> nodes{{0, 0, 0}};
  std::unordered_map<ExchangeMatrix, std::size_t, ExchangeMatrixHash> seen{{start, 0}};

  auto word_to = [&](std::size_t i) {
    MutationWord w;
    for (; i != 0; i = nodes[i].parent) w.push_back(nodes[i].direction);
    return MutationWord(w.rbegin(), w.rend());
  };

  ReachabilityResult result;
  bool truncated = false;
  for (std::size_t head = 0; head < states.size(); ++head) {
    if (states[head] == target) {
      result.reached = true;
      result.word = word_to(head);
      break;
    }
    for (std::size_t k = 0; k < start.rank(); ++k) {
      ExchangeMatrix next = mutate_matrix(states[head], k);
      if (seen.count(next)) continue;
      if (nodes[head].depth == max_depth || states.size() == max_states) {
        truncated = true;
        continue;
      }
      seen.emplace(next, states.size());
      states.push_back(std::move(next));
      nodes.push_back({head, k, nodes[head].depth + 1});
    }
  }
  result.states = states.size();
  result.exhausted = !result.reached && !truncated;
  return result;
}

}  // namespace cluster
