#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/seed.hpp"

namespace cluster {

enum class Parity : unsigned char { Even, Odd };

class ParityPattern {
 public:
  ParityPattern() = default;
  /// All Even.
  explicit ParityPattern(std::size_t n) : n_(n), odd_(n * n, false) {}
  /// Throws InvalidInput unless square with Even diagonal. Entries (i,j) and
  /// (j,i) may differ: b_ij and b_ji need not share a parity when d is not constant.
  static ParityPattern from_rows(const std::vector<std::vector<Parity>>& rows);

  std::size_t rank() const { return n_; }
  Parity operator()(std::size_t i, std::size_t j) const { return odd_[i * n_ + j] ? Parity::Odd : Parity::Even; }
  bool even(std::size_t i, std::size_t j) const { return !odd_[i * n_ + j]; }
  bool matches(const ExchangeMatrix& b) const;

  friend bool operator==(const ParityPattern&, const ParityPattern&) = default;

  /// Rows of 'E'/'O', e.g. "EEE/EEO/EOE".
  std::string to_string() const;

 private:
  friend ParityPattern parity_of(const ExchangeMatrix& b);
  std::size_t n_ = 0;
  std::vector<bool> odd_;
};

ParityPattern parity_of(const ExchangeMatrix& b);

/// Why entry (i,j) keeps its parity under mu_k (0-based indices).
struct Justification {
  enum class Reason { Negated, LeftEven, RightEven };
  std::size_t k, i, j;
  Reason reason;
  /// "negated", "(2,1) even", ... with 1-based indices.
  std::string describe() const;
};

using ClosureProof = std::vector<Justification>;

/// First (k, i, j) with (i,k) and (k,j) both Odd.
struct UnclosedTriple {
  std::size_t k, i, j;
};

/// Proof that p is preserved by every mu_k: one entry per k and per ordered
/// pair i != j, ordered by k then (i, j). Empty optional when p is not closed.
std::optional<ClosureProof> is_closed(const ParityPattern& p);
std::optional<UnclosedTriple> first_unclosed_triple(const ParityPattern& p);

struct UnreachabilityCertificate {
  ParityPattern pattern;
  ExchangeMatrix start;
  ExchangeMatrix target;
  bool start_check = false;
  bool target_check = false;
  ClosureProof closure_proof;
};

/// Re-derives every claim of the certificate from scratch.
bool verify_certificate(const UnreachabilityCertificate& c);

/// Certificate from the start matrix's own parity pattern, if it separates.
/// Throws SizeMismatch.
std::optional<UnreachabilityCertificate> certify_unreachable(const ExchangeMatrix& start,
                                                             const ExchangeMatrix& target);

struct ReachabilityResult {
  bool reached = false;
  MutationWord word;          // valid when reached
  std::size_t states = 0;     // distinct matrices visited
  bool exhausted = false;     // the whole reachable set was enumerated
};

/// BFS over matrices with deduplication. Throws InvalidInput on zero limits
/// and SizeMismatch on rank mismatch.
ReachabilityResult bounded_reachability(const ExchangeMatrix& start, const ExchangeMatrix& target,
                                        std::size_t max_depth, std::size_t max_states);

}  // namespace cluster
