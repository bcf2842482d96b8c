#include "cluster/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

#include "cluster/errors.hpp"

namespace cluster {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = e.size();
    for (int x : e) hash_combine(h, std::hash<int>{}(x));
    return h;
  }
};

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

Exponents sum(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

/// Product with exponents packed into one mixed-radix key; nullopt when the
/// exponent box does not fit in 64 bits.
std::optional<std::vector<Term>> packed_product(const std::vector<Term>& f, const std::vector<Term>& g,
                                                std::size_t n) {
  auto bounds = [n](const std::vector<Term>& p) {
    Exponents lo = p.front().exponents;
    Exponents hi = lo;
    for (const Term& t : p) {
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], t.exponents[i]);
        hi[i] = std::max(hi[i], t.exponents[i]);
      }
    }
    return std::pair{lo, hi};
  };
  const auto [f_lo, f_hi] = bounds(f);
  const auto [g_lo, g_hi] = bounds(g);
  std::vector<std::uint64_t> stride(n);
  unsigned __int128 volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    stride[i] = static_cast<std::uint64_t>(volume);
    volume *= static_cast<unsigned __int128>(f_hi[i] - f_lo[i]) + (g_hi[i] - g_lo[i]) + 1;
    if (volume >> 63) return std::nullopt;
  }
  auto encode = [&](const std::vector<Term>& p, const Exponents& lo) {
    std::vector<std::uint64_t> keys(p.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
      for (std::size_t i = 0; i < n; ++i) keys[t] += static_cast<std::uint64_t>(p[t].exponents[i] - lo[i]) * stride[i];
    }
    return keys;
  };
  const auto f_keys = encode(f, f_lo);
  const auto g_keys = encode(g, g_lo);

  std::unordered_map<std::uint64_t, Integer> acc;
  acc.reserve(std::min(f.size() * g.size(), 4 * (f.size() + g.size())));
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      Integer& slot = acc[f_keys[a] + g_keys[b]];
      mpz_addmul(slot.get_mpz_t(), f[a].coefficient.get_mpz_t(), g[b].coefficient.get_mpz_t());
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (c == 0) continue;
    Exponents e(n);
    std::uint64_t rest = key;
    for (std::size_t i = n; i-- > 0;) {
      e[i] = static_cast<int>(rest / stride[i]) + f_lo[i] + g_lo[i];
      rest %= stride[i];
    }
    terms.push_back(Term{std::move(e), std::move(c)});
  }
  return terms;
}

/// Polynomial exact division by leading-term elimination. Both inputs have
/// nonnegative exponents and g has at least two terms.
std::optional<LaurentPoly> divide_polynomials(const LaurentPoly& f, const LaurentPoly& g) {
  const std::size_t n = f.variables();
  const Term& lead = g.leading();
  const int g_low = total_degree(g.terms().front().exponents);

  std::map<Exponents, Integer, GradedLess> remainder;
  for (const Term& t : f.terms()) remainder.emplace_hint(remainder.end(), t.exponents, t.coefficient);

  std::vector<Term> quotient;
  Exponents q_exp(n);
  Integer q_coeff;
  Integer product;
  while (!remainder.empty()) {
    auto top = std::prev(remainder.end());
    const Exponents& r_exp = top->first;
    if (!divides(lead.exponents, r_exp)) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coefficient.get_mpz_t())) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) q_exp[i] = r_exp[i] - lead.exponents[i];
    mpz_divexact(q_coeff.get_mpz_t(), top->second.get_mpz_t(), lead.coefficient.get_mpz_t());
    // An exact remainder is g times a polynomial, so no term sits below g's lowest degree.
    if (total_degree(remainder.begin()->first) < g_low) return std::nullopt;
    remainder.erase(top);
    for (std::size_t t = 0; t + 1 < g.size(); ++t) {
      const Term& gt = g.terms()[t];
      product = gt.coefficient * q_coeff;
      Exponents key = sum(gt.exponents, q_exp);
      auto [it, inserted] = remainder.try_emplace(std::move(key));
      if (inserted) {
        it->second = -product;
      } else {
        it->second -= product;
        if (it->second == 0) remainder.erase(it);
      }
    }
    quotient.push_back(Term{q_exp, q_coeff});
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPoly::from_terms(n, std::move(quotient));
}

}  // namespace

int compare_graded(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

LaurentPoly LaurentPoly::constant(std::size_t variables, const Integer& c) {
  LaurentPoly p(variables);
  if (c != 0) p.terms_.push_back(Term{Exponents(variables, 0), c});
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t variables, std::size_t i) {
  require_index(i, variables, "LaurentPoly::variable");
  Exponents e(variables, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponents exponents, const Integer& c) {
  LaurentPoly p(exponents.size());
  if (c != 0) p.terms_.push_back(Term{std::move(exponents), c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t variables, std::vector<Term> terms) {
  for (const Term& t : terms) {
    require_same_size(t.exponents.size(), variables, "LaurentPoly::from_terms");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_graded(a.exponents, b.exponents) < 0;
  });
  LaurentPoly p(variables);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents low = terms_.front().exponents;
  for (const Term& t : terms_) {
    for (std::size_t i = 0; i < n_; ++i) low[i] = std::min(low[i], t.exponents[i]);
  }
  return low;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  require_same_size(shift.size(), n_, "LaurentPoly::shifted");
  LaurentPoly p(n_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{sum(t.exponents, shift), t.coefficient});
  return p;  // the graded order is translation invariant
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (Term& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  require_same_size(f.n_, g.n_, "LaurentPoly addition");
  LaurentPoly out(f.n_);
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < f.terms_.size() || b < g.terms_.size()) {
    int c = 0;
    if (a == f.terms_.size()) {
      c = 1;
    } else if (b == g.terms_.size()) {
      c = -1;
    } else {
      c = compare_graded(f.terms_[a].exponents, g.terms_[b].exponents);
    }
    if (c < 0) {
      out.terms_.push_back(f.terms_[a++]);
    } else if (c > 0) {
      out.terms_.push_back(g.terms_[b++]);
    } else {
      Integer s = f.terms_[a].coefficient + g.terms_[b].coefficient;
      if (s != 0) out.terms_.push_back(Term{f.terms_[a].exponents, std::move(s)});
      ++a;
      ++b;
    }
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return f + (-g); }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  require_same_size(f.n_, g.n_, "LaurentPoly multiplication");
  if (f.is_zero() || g.is_zero()) return LaurentPoly(f.n_);
  if (g.is_monomial() || f.is_monomial()) {
    const LaurentPoly& poly = g.is_monomial() ? f : g;
    const Term& mono = g.is_monomial() ? g.terms_.front() : f.terms_.front();
    LaurentPoly out = poly.shifted(mono.exponents);
    for (Term& t : out.terms_) t.coefficient *= mono.coefficient;
    return out;
  }
  if (auto packed = packed_product(f.terms_, g.terms_, f.n_)) return LaurentPoly::from_terms(f.n_, std::move(*packed));
  std::unordered_map<Exponents, Integer, ExponentsHash> acc;
  acc.reserve(std::min(f.terms_.size() * g.terms_.size(), 4 * (f.terms_.size() + g.terms_.size())));
  for (const Term& a : f.terms_) {
    for (const Term& b : g.terms_) {
      Integer& slot = acc[sum(a.exponents, b.exponents)];
      mpz_addmul(slot.get_mpz_t(), a.coefficient.get_mpz_t(), b.coefficient.get_mpz_t());
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) terms.push_back(Term{e, std::move(c)});
  }
  return LaurentPoly::from_terms(f.n_, std::move(terms));
}

bool operator<(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.n_ != g.n_) return f.n_ < g.n_;
  const std::size_t m = std::min(f.terms_.size(), g.terms_.size());
  for (std::size_t i = 0; i < m; ++i) {
    const int c = compare_graded(f.terms_[i].exponents, g.terms_[i].exponents);
    if (c != 0) return c < 0;
    if (f.terms_[i].coefficient != g.terms_[i].coefficient) {
      return f.terms_[i].coefficient < g.terms_[i].coefficient;
    }
  }
  return f.terms_.size() < g.terms_.size();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = n_;
  for (const Term& t : terms_) {
    hash_combine(h, ExponentsHash{}(t.exponents));
    hash_combine(h, hash_value(t.coefficient));
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    const std::string mono = monomial_string(t.exponents);
    Integer magnitude = abs(t.coefficient);
    std::string body;
    if (mono.empty()) {
      body = magnitude.get_str();
    } else if (magnitude == 1) {
      body = mono;
    } else {
      body = magnitude.get_str() + "*" + mono;
    }
    if (out.empty()) {
      out = (t.coefficient < 0 ? "-" : "") + body;
    } else {
      out += (t.coefficient < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
LaurentPoly neg(const LaurentPoly& f) { return -f; }

LaurentPoly pow(const LaurentPoly& f, unsigned k) {
  // Term counts grow polynomially in k, so multiplying by the sparse base
  // beats squaring a dense intermediate.
  LaurentPoly result = LaurentPoly::constant(f.variables(), 1);
  for (unsigned i = 0; i < k; ++i) result = result * f;
  return result;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  require_same_size(f.variables(), g.variables(), "exact_divide");
  if (g.is_zero()) throw DivisionByZero("exact_divide by the zero polynomial");
  if (f.is_zero()) return LaurentPoly(f.variables());

  if (g.is_monomial()) {
    const Term& m = g.leading();
    std::vector<Term> terms;
    terms.reserve(f.size());
    Exponents shift(m.exponents.size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -m.exponents[i];
    LaurentPoly out = f.shifted(shift);
    for (const Term& t : out.terms()) {
      if (!mpz_divisible_p(t.coefficient.get_mpz_t(), m.coefficient.get_mpz_t())) return std::nullopt;
    }
    std::vector<Term> divided = out.terms();
    for (Term& t : divided) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), m.coefficient.get_mpz_t());
    return LaurentPoly::from_terms(f.variables(), std::move(divided));
  }

  // With both sides normalized to minimum exponent zero in every variable,
  // a Laurent quotient exists only if a polynomial quotient does.
  Exponents f_low = f.min_exponents();
  Exponents g_low = g.min_exponents();
  Exponents f_shift(f_low.size());
  Exponents g_shift(g_low.size());
  Exponents back(f_low.size());
  for (std::size_t i = 0; i < f_low.size(); ++i) {
    f_shift[i] = -f_low[i];
    g_shift[i] = -g_low[i];
    back[i] = f_low[i] - g_low[i];
  }
  auto q = divide_polynomials(f.shifted(f_shift), g.shifted(g_shift));
  if (!q) return std::nullopt;
  return q->shifted(back);
}

std::optional<LaurentPoly> substitute(const LaurentPoly& f, std::span<const LaurentPoly> images) {
  require_same_size(images.size(), f.variables(), "substitute");
  if (images.empty()) return f;
  const std::size_t m = images.front().variables();
  for (const LaurentPoly& img : images) {
    require_same_size(img.variables(), m, "substitute images");
    if (img.is_zero()) throw ZeroImage("substitute: image of a variable is zero");
  }
  if (f.is_zero()) return LaurentPoly(m);

  const std::size_t n = f.variables();
  // Unit monomials invert inside the Laurent ring; other images with negative
  // powers are cleared into one common denominator.
  std::vector<bool> invertible(n);
  std::vector<int> clear(n, 0);
  const Exponents low = f.min_exponents();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& img = images[i];
    invertible[i] = img.is_monomial() && abs(img.leading().coefficient) == 1;
    if (!invertible[i] && low[i] < 0) clear[i] = -low[i];
  }

  std::vector<std::map<int, LaurentPoly>> cache(n);
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    LaurentPoly value(m);
    if (e >= 0) {
      value = pow(images[i], static_cast<unsigned>(e));
    } else {
      const Term& t = images[i].leading();
      Exponents inv(m);
      for (std::size_t j = 0; j < m; ++j) inv[j] = t.exponents[j] * e;
      Integer c = (t.coefficient < 0 && (-e) % 2 == 1) ? Integer(-1) : Integer(1);
      value = LaurentPoly::monomial(std::move(inv), c);
    }
    return cache[i].emplace(e, std::move(value)).first->second;
  };

  LaurentPoly numerator(m);
  for (const Term& t : f.terms()) {
    LaurentPoly product = LaurentPoly::constant(m, t.coefficient);
    for (std::size_t i = 0; i < n; ++i) {
      const int e = t.exponents[i] + clear[i];
      if (e != 0) product = product * power(i, e);
    }
    numerator = numerator + product;
  }

  LaurentPoly denominator = LaurentPoly::constant(m, 1);
  bool trivial = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (clear[i] > 0) {
      denominator = denominator * power(i, clear[i]);
      trivial = false;
    }
  }
  if (trivial) return numerator;
  return exact_divide(numerator, denominator);
}

LaurentPoly permute_variables(const Permutation& sigma, const LaurentPoly& f) {
  require_same_size(sigma.size(), f.variables(), "permute_variables");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Exponents e(t.exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[sigma(i)] = t.exponents[i];
    terms.push_back(Term{std::move(e), t.coefficient});
  }
  return LaurentPoly::from_terms(f.variables(), std::move(terms));
}

NormalForm normal_form(const LaurentPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("normal_form of the zero polynomial");
  Exponents alpha = f.min_exponents();
  for (int& a : alpha) a = -a;
  return NormalForm{f.shifted(alpha), alpha};
}

std::string NormalForm::to_string() const {
  Exponents up(alpha.size(), 0);
  Exponents down(alpha.size(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) up[i] = -alpha[i];
    if (alpha[i] > 0) down[i] = alpha[i];
  }
  std::string out = numerator.to_string();
  const std::string factor = monomial_string(up);
  if (!factor.empty()) {
    if (out == "1") {
      out = factor;
    } else if (out == "-1") {
      out = "-" + factor;
    } else {
      out = (numerator.is_monomial() ? out : "(" + out + ")") + "*" + factor;
    }
  }
  const std::string den = monomial_string(down);
  if (!den.empty()) out += " / (" + den + ")";
  return out;
}

bool is_positive(const LaurentPoly& f) {
  const NormalForm nf = normal_form(f);
  return std::all_of(nf.numerator.terms().begin(), nf.numerator.terms().end(),
                     [](const Term& t) { return t.coefficient > 0; });
}

}  // namespace cluster
