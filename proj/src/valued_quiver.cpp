#include "cluster/valued_quiver.hpp"

#include "cluster/errors.hpp"

namespace cluster {

namespace {

void check_arrows(std::size_t n, const ArrowMap& arrows) {
  for (const auto& [ends, val] : arrows) {
    const auto [i, j] = ends;
    if (i >= n || j >= n) throw InvalidInput("arrow endpoint outside the vertex set");
    if (i == j) throw InvalidInput("loops are not allowed");
    if (arrows.contains({j, i})) throw InvalidInput("2-cycles are not allowed");
    if (val.forward < 1 || val.backward < 1) throw InvalidInput("valuations must be positive");
  }
}

IntegerRows rows_of(std::size_t n, const ArrowMap& arrows) {
  IntegerRows rows(n, std::vector<Integer>(n, 0));
  for (const auto& [ends, val] : arrows) {
    rows[ends.first][ends.second] = val.forward;
    rows[ends.second][ends.first] = -val.backward;
  }
  return rows;
}

}  // namespace

ValuedQuiver::ValuedQuiver(std::size_t n, ArrowMap arrows, std::vector<Integer> d)
    : n_(n), arrows_(std::move(arrows)), d_(std::move(d)) {
  check_arrows(n_, arrows_);
  if (d_.size() != n_) throw InvalidInput("symmetrizer length differs from rank");
  for (const auto& di : d_) {
    if (di < 1) throw InvalidInput("symmetrizer entries must be positive");
  }
  for (const auto& [ends, val] : arrows_) {
    if (d_[ends.first] * val.forward != val.backward * d_[ends.second]) {
      throw InvalidInput("symmetrizer law d_i v_ij = v_ji d_j fails on arrow " +
                         std::to_string(ends.first + 1) + "->" + std::to_string(ends.second + 1));
    }
  }
}

ValuedQuiver::ValuedQuiver(std::size_t n, ArrowMap arrows) : n_(n), arrows_(std::move(arrows)) {
  check_arrows(n_, arrows_);
  auto d = find_symmetrizer(rows_of(n_, arrows_));
  if (!d) throw InvalidInput("valuations admit no symmetrizer");
  d_ = std::move(*d);
}

std::optional<Valuation> ValuedQuiver::arrow(std::size_t from, std::size_t to) const {
  auto it = arrows_.find({from, to});
  if (it == arrows_.end()) return std::nullopt;
  return it->second;
}

std::string ValuedQuiver::to_string() const {
  std::string out;
  for (const auto& [ends, val] : arrows_) {
    if (!out.empty()) out += ", ";
    out += std::to_string(ends.first + 1);
    if (val.forward == 1 && val.backward == 1) {
      out += " -> ";
    } else {
      out += " -(" + val.forward.get_str() + "," + val.backward.get_str() + ")-> ";
    }
    out += std::to_string(ends.second + 1);
  }
  return out.empty() ? "(no arrows)" : out;
}

ExchangeMatrix matrix_from_quiver(const ValuedQuiver& q) {
  return ExchangeMatrix(rows_of(q.rank(), q.arrows()));
}

ValuedQuiver quiver_from_matrix(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  ArrowMap arrows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j) > 0) arrows[{i, j}] = Valuation{b(i, j), -b(j, i)};
    }
  }
  return ValuedQuiver(n, std::move(arrows));
}

ValuedQuiver mutate_quiver(const ValuedQuiver& q, std::size_t k) {
  require_index(k, q.rank(), "mutate_quiver");

  // Rule (1): arrows at k are reversed with their valuation components swapped.
  ArrowMap result;
  std::vector<std::pair<std::size_t, Valuation>> into_k;   // i -> k
  std::vector<std::pair<std::size_t, Valuation>> out_of_k;  // k -> j
  for (const auto& [ends, val] : q.arrows()) {
    const auto [i, j] = ends;
    if (j == k) {
      into_k.emplace_back(i, val);
      result[{k, i}] = Valuation{val.backward, val.forward};
    } else if (i == k) {
      out_of_k.emplace_back(j, val);
      result[{j, k}] = Valuation{val.backward, val.forward};
    } else {
      result[ends] = val;
    }
  }

  // Rules (2) and (3) for every path i -> k -> j.
  for (const auto& [i, in] : into_k) {
    for (const auto& [j, out] : out_of_k) {
      if (i == j) continue;
      const Integer along = in.forward * out.forward;    // v_ik v_kj
      const Integer against = in.backward * out.backward;  // v_ki v_jk
      if (auto it = result.find({i, j}); it != result.end()) {
        it->second.forward += along;
        it->second.backward += against;
      } else if (auto rev = result.find({j, i}); rev != result.end()) {
        const Integer v_ji = rev->second.forward;
        const Integer v_ij = rev->second.backward;
        if (along < v_ij) {
          rev->second = Valuation{v_ji - against, v_ij - along};
        } else if (along > v_ij) {
          result.erase(rev);
          result[{i, j}] = Valuation{along - v_ij, abs(v_ji - against)};
        } else {
          result.erase(rev);
        }
      } else {
        result[{i, j}] = Valuation{along, against};
      }
    }
  }
  return ValuedQuiver(q.rank(), std::move(result), q.symmetrizer());
}

ValuedQuiver apply_automorphism_to_quiver(const Permutation& sigma, const ValuedQuiver& q) {
  require_same_size(sigma.size(), q.rank(), "apply_automorphism_to_quiver");
  ArrowMap arrows;
  for (const auto& [ends, val] : q.arrows()) arrows[{sigma(ends.first), sigma(ends.second)}] = val;
  std::vector<Integer> d(q.rank());
  for (std::size_t i = 0; i < q.rank(); ++i) d[sigma(i)] = q.symmetrizer()[i];
  return ValuedQuiver(q.rank(), std::move(arrows), std::move(d));
}

ValuedQuiver opposite_quiver(const ValuedQuiver& q) {
  ArrowMap arrows;
  for (const auto& [ends, val] : q.arrows()) {
    arrows[{ends.second, ends.first}] = Valuation{val.backward, val.forward};
  }
  return ValuedQuiver(q.rank(), std::move(arrows), q.symmetrizer());
}

}  // namespace cluster
