#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/integer.hpp"
#include "cluster/permutation.hpp"

namespace cluster {

/// Valuation (v_ij, v_ji) carried by an arrow i -> j.
struct Valuation {
  Integer forward;
  Integer backward;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

using ArrowMap = std::map<std::pair<std::size_t, std::size_t>, Valuation>;

/// Valued quiver on vertices 0..n-1 (printed 1..n): no loops, no 2-cycles,
/// positive valuations, and d_i v_ij = v_ji d_j on every arrow.
class ValuedQuiver {
 public:
  ValuedQuiver() = default;
  /// Validates every invariant; throws InvalidInput on violation.
  ValuedQuiver(std::size_t n, ArrowMap arrows, std::vector<Integer> d);
  /// Same, with the minimal symmetrizer computed from the arrows.
  ValuedQuiver(std::size_t n, ArrowMap arrows);

  std::size_t rank() const { return n_; }
  const ArrowMap& arrows() const { return arrows_; }
  const std::vector<Integer>& symmetrizer() const { return d_; }
  std::optional<Valuation> arrow(std::size_t from, std::size_t to) const;

  /// Arrows and valuations agree; symmetrizers may differ by rescaling.
  bool same_arrows(const ValuedQuiver& other) const {
    return n_ == other.n_ && arrows_ == other.arrows_;
  }
  friend bool operator==(const ValuedQuiver&, const ValuedQuiver&) = default;

  /// "1 -(2,2)-> 2, 2 -> 3" with unit valuations elided.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  ArrowMap arrows_;
  std::vector<Integer> d_;
};

ExchangeMatrix matrix_from_quiver(const ValuedQuiver& q);
/// Throws NotSkewSymmetrizable via the ExchangeMatrix invariant only; the
/// resulting quiver carries the minimal symmetrizer.
ValuedQuiver quiver_from_matrix(const ExchangeMatrix& b);

/// Arrow-level mutation at vertex k; d is unchanged.
ValuedQuiver mutate_quiver(const ValuedQuiver& q, std::size_t k);

/// Relabels vertex i as sigma(i); d'_{sigma(i)} = d_i.
ValuedQuiver apply_automorphism_to_quiver(const Permutation& sigma, const ValuedQuiver& q);

/// Reverses every arrow and swaps valuation components.
ValuedQuiver opposite_quiver(const ValuedQuiver& q);

}  // namespace cluster
