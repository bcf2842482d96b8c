#include "cluster/exchange_matrix.hpp"

#include <climits>
#include <queue>

#include "cluster/errors.hpp"

namespace cluster {

int to_exponent(const Integer& x) {
  if (!x.fits_sint_p()) throw InvalidInput("integer " + x.get_str() + " too large for an exponent");
  return static_cast<int>(x.get_si());
}

std::optional<std::vector<Integer>> find_symmetrizer(const IntegerRows& rows) {
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(rows[i][j]) != -sgn(rows[j][i])) return std::nullopt;
    }
  }

  // Ratios d_j / d_i = -b_ij / b_ji propagated along a BFS spanning tree.
  std::vector<std::optional<mpq_class>> ratio(n);
  std::vector<Integer> d(n, 1);
  for (std::size_t root = 0; root < n; ++root) {
    if (ratio[root]) continue;
    std::vector<std::size_t> component{root};
    ratio[root] = mpq_class(1);
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (rows[i][j] == 0) continue;
        mpq_class step(Integer(-rows[i][j]), rows[j][i]);
        step.canonicalize();
        const mpq_class dj = *ratio[i] * step;
        if (!ratio[j]) {
          ratio[j] = dj;
          component.push_back(j);
          frontier.push(j);
        } else if (*ratio[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Integer denominators = 1;
    for (std::size_t v : component) denominators = lcm(denominators, ratio[v]->get_den());
    Integer numerators = 0;
    for (std::size_t v : component) {
      const mpq_class scaled = *ratio[v] * denominators;
      d[v] = scaled.get_num();
      numerators = gcd(numerators, d[v]);
    }
    for (std::size_t v : component) d[v] /= numerators;
  }
  return d;
}

ExchangeMatrix::ExchangeMatrix(const IntegerRows& rows) : n_(rows.size()) {
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidInput("exchange matrix must be square");
  }
  auto d = find_symmetrizer(rows);
  if (!d) throw NotSkewSymmetrizable("matrix is not skew-symmetrizable");
  d_ = std::move(*d);
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) entries_.insert(entries_.end(), row.begin(), row.end());
}

ExchangeMatrix ExchangeMatrix::zero(std::size_t n) {
  return ExchangeMatrix(n, std::vector<Integer>(n * n, 0), std::vector<Integer>(n, 1));
}

IntegerRows ExchangeMatrix::rows() const {
  IntegerRows out(n_, std::vector<Integer>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

bool ExchangeMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

ExchangeMatrix ExchangeMatrix::operator-() const {
  std::vector<Integer> neg(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) neg[i] = -entries_[i];
  return ExchangeMatrix(n_, std::move(neg), d_);
}

std::size_t ExchangeMatrix::hash() const {
  std::size_t h = n_;
  for (const auto& e : entries_) hash_combine(h, hash_value(e));
  return h;
}

std::string ExchangeMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ',';
      out += (*this)(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.rank();
  require_index(k, n, "mutate_matrix");
  std::vector<Integer> out(n * n);
  Integer prod;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer& e = out[i * n + j];
      if (i == k || j == k) {
        e = -b(i, j);
        continue;
      }
      e = b(i, j);
      prod = b(i, k) * b(k, j);
      if (prod > 0) {
        if (b(i, k) > 0) {
          e += prod;
        } else {
          e -= prod;
        }
      }
    }
  }
  return ExchangeMatrix(n, std::move(out), b.d_);
}

ExchangeMatrix permute_matrix(const Permutation& sigma, const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  require_same_size(sigma.size(), n, "permute_matrix");
  std::vector<Integer> out(n * n);
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[sigma(i)] = b.d_[i];
    for (std::size_t j = 0; j < n; ++j) out[sigma(i) * n + sigma(j)] = b(i, j);
  }
  return ExchangeMatrix(n, std::move(out), std::move(d));
}

}  // namespace cluster
