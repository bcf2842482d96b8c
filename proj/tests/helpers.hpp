#pragma once

#include <initializer_list>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/laurent.hpp"
#include "cluster/seed.hpp"
#include "cluster/valued_quiver.hpp"
#include "oracle.hpp"

namespace th {

using namespace cluster;

inline ExchangeMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerRows out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (long x : row) r.emplace_back(x);
  }
  return ExchangeMatrix(out);
}

inline oracle::Rows to_rows(const ExchangeMatrix& b) {
  oracle::Rows out(b.rank(), std::vector<long>(b.rank()));
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) out[i][j] = b(i, j).get_si();
  }
  return out;
}

/// t_i as a polynomial in n variables, 1-based like the printed names.
inline LaurentPoly t(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i - 1); }
inline LaurentPoly c(std::size_t n, long v) { return LaurentPoly::constant(n, v); }
inline LaurentPoly mono(Exponents e, long coeff = 1) { return LaurentPoly::monomial(std::move(e), coeff); }

inline ArrowMap arrows(std::initializer_list<std::tuple<std::size_t, std::size_t, long, long>> list) {
  ArrowMap out;
  for (const auto& [i, j, vij, vji] : list) out.emplace(std::pair{i - 1, j - 1}, Valuation{vij, vji});
  return out;
}

inline const ExchangeMatrix& a2() { static const auto b = M({{0, 1}, {-1, 0}}); return b; }
inline const ExchangeMatrix& a3() { static const auto b = M({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); return b; }
inline const ExchangeMatrix& b2() { static const auto b = M({{0, 2}, {-1, 0}}); return b; }
inline const ExchangeMatrix& g2() { static const auto b = M({{0, 3}, {-1, 0}}); return b; }
inline const ExchangeMatrix& markov() { static const auto b = M({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}); return b; }
inline const ExchangeMatrix& parity_start() { static const auto b = M({{0, 2, 0}, {-2, 0, 1}, {0, -1, 0}}); return b; }
inline const ExchangeMatrix& parity_target() { static const auto b = M({{0, -2, 1}, {2, 0, 0}, {-1, 0, 0}}); return b; }

/// 1 -(2,1)-> 2, 1 -(4,1)-> 3, 3 -(1,2)-> 2 with d = (1,2,4).
inline ValuedQuiver valued_triangle() {
  return ValuedQuiver(3, arrows({{1, 2, 2, 1}, {1, 3, 4, 1}, {3, 2, 1, 2}}), {1, 2, 4});
}

}  // namespace th
