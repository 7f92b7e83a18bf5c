// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomials over exact rationals in canonical form,
// with symmetrization and the structured determinant builders.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "moments/matrix.hpp"
#include "moments/rational.hpp"

namespace moments {

using ExponentVector = std::vector<std::uint32_t>;

// Graded lexicographic order: first by total degree, then lexicographically.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) throw std::invalid_argument("MultiPoly: num_vars must be positive");
  }

  static MultiPoly constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(ExponentVector(num_vars, 0), c);
    return p;
  }

  static MultiPoly monomial(std::size_t num_vars, const ExponentVector& exp,
                            const Rational& coef) {
    MultiPoly p(num_vars);
    p.add_term(exp, coef);
    return p;
  }

  // The monomial x_{index+1} (0-based variable index).
  static MultiPoly variable(std::size_t num_vars, std::size_t index) {
    ExponentVector e(num_vars, 0);
    e.at(index) = 1;
    return monomial(num_vars, e, Rational(1));
  }

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Accumulates coef onto the term; zero results are erased so the term map
  // stays canonical (no stored zero coefficient).
  void add_term(const ExponentVector& exp, const Rational& coef) {
    if (exp.size() != num_vars_)
      throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    if (coef.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, coef);
    } else {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool operator==(const MultiPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(num_vars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        ExponentVector e(num_vars_);
        for (std::size_t i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly scale(const Rational& c) const {
    MultiPoly r(num_vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(num_vars_, Rational(1));
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  Rational eval(const std::vector<Rational>& point) const {
    if (point.size() != num_vars_)
      throw std::invalid_argument("eval: point dimension mismatch");
    Rational acc;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < num_vars_; ++i)
        if (e[i] != 0) term *= point[i].pow(e[i]);
      acc += term;
    }
    return acc;
  }

  // q = p.permute_vars(pi) is q(x_1,...,x_d) = p(x_{pi[0]+1},...,x_{pi[d-1]+1}):
  // argument slot l of p receives variable pi[l], so exponent e[l] moves to
  // position pi[l] in the image term.
  MultiPoly permute_vars(const std::vector<std::size_t>& pi) const {
    if (pi.size() != num_vars_)
      throw std::invalid_argument("permute_vars: permutation length mismatch");
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
      ExponentVector f(num_vars_, 0);
      for (std::size_t l = 0; l < num_vars_; ++l) f[pi[l]] = e[l];
      r.add_term(f, c);
    }
    return r;
  }

  // Average over all d! coordinate permutations. Enumeration is explicit, so
  // the factorial growth is capped.
  MultiPoly symmetrize() const {
    if (num_vars_ > 8)
      throw std::domain_error("symmetrize: supported for at most 8 variables");
    MultiPoly sum(num_vars_);
    std::vector<std::size_t> pi(num_vars_);
    std::iota(pi.begin(), pi.end(), 0);
    std::uint64_t count = 0;
    do {
      for (const auto& [e, c] : terms_) {
        ExponentVector f(num_vars_, 0);
        for (std::size_t l = 0; l < num_vars_; ++l) f[pi[l]] = e[l];
        sum.add_term(f, c);
      }
      ++count;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return sum.scale(Rational(1) / Rational(static_cast<long long>(count)));
  }

  // Invariance under the adjacent transpositions, which generate the full
  // symmetric group.
  bool is_symmetric() const {
    std::vector<std::size_t> pi(num_vars_);
    for (std::size_t k = 0; k + 1 < num_vars_; ++k) {
      std::iota(pi.begin(), pi.end(), 0);
      std::swap(pi[k], pi[k + 1]);
      if (permute_vars(pi) != *this) return false;
    }
    return true;
  }

  // Common total degree of all terms if one exists; the zero polynomial
  // reports degree 0.
  std::optional<std::uint32_t> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::uint64_t deg = term_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (term_degree(e) != deg) return std::nullopt;
    }
    return static_cast<std::uint32_t>(deg);
  }

  std::uint32_t total_degree() const {
    std::uint64_t deg = 0;
    for (const auto& [e, c] : terms_) {
      (void)c;
      deg = std::max(deg, term_degree(e));
    }
    return static_cast<std::uint32_t>(deg);
  }

  // Largest single exponent appearing in any term (the largest sequence
  // offset the T_p operator will address).
  std::uint32_t max_exponent_entry() const {
    std::uint32_t m = 0;
    for (const auto& [e, c] : terms_) {
      (void)c;
      for (std::uint32_t x : e) m = std::max(m, x);
    }
    return m;
  }

 private:
  static std::uint64_t term_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }

  void check_same_vars(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_)
      throw std::invalid_argument("MultiPoly: operand num_vars mismatch");
  }

  std::size_t num_vars_;
  TermMap terms_;
};

namespace detail {

inline void check_strictly_increasing_positive(const std::vector<std::uint32_t>& v,
                                               const char* what) {
  if (v.empty()) throw std::invalid_argument(std::string(what) + ": must be non-empty");
  std::uint32_t prev = 0;
  for (std::uint32_t x : v) {
    if (x <= prev)
      throw std::invalid_argument(std::string(what) +
                                  ": entries must be strictly increasing and positive");
    prev = x;
  }
}

// Leibniz expansion of a determinant whose (i, j) entry is the monomial
// x_i^{exp(i, j)}: each permutation contributes sgn(sigma) * prod_i
// x_i^{exp(i, sigma(i))}. When every row has distinct column exponents the
// exponent vector identifies sigma, so the expansion is already canonical.
template <typename ExpFn>
MultiPoly leibniz_monomial_det(std::size_t d, ExpFn exp) {
  MultiPoly p(d);
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::size_t> ref = sigma;
  do {
    // Permutation sign by counting inversions.
    int inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    ExponentVector e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = exp(i, sigma[i]);
    p.add_term(e, Rational(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return p;
}

}  // namespace detail

// Generalized Vandermonde determinant D_beta: row i is
// (1, x_i^{b_1}, ..., x_i^{b_{d-1}}).
inline MultiPoly vandermonde_poly(const std::vector<std::uint32_t>& beta, std::size_t d) {
  if (d < 2) throw std::invalid_argument("vandermonde_poly: need d >= 2");
  detail::check_strictly_increasing_positive(beta, "vandermonde_poly beta");
  if (beta.size() + 1 != d)
    throw std::invalid_argument("vandermonde_poly: beta must have d-1 entries");
  return detail::leibniz_monomial_det(
      d, [&](std::size_t i, std::size_t j) -> std::uint32_t {
        (void)i;
        return j == 0 ? 0 : beta[j - 1];
      });
}

// Determinant polynomial with entry (i, j) = x_i^{t_{i-1} + r_{j-1}} where
// r_0 = t_0 = 0; equals prod_i x_i^{t_{i-1}} * D_r(x_1, ..., x_d).
inline MultiPoly minor_poly(const std::vector<std::uint32_t>& r,
                            const std::vector<std::uint32_t>& t) {
  detail::check_strictly_increasing_positive(r, "minor_poly r");
  detail::check_strictly_increasing_positive(t, "minor_poly t");
  if (r.size() != t.size())
    throw std::invalid_argument("minor_poly: r and t must have equal length");
  const std::size_t d = r.size() + 1;
  return detail::leibniz_monomial_det(
      d, [&](std::size_t i, std::size_t j) -> std::uint32_t {
        std::uint32_t ti = i == 0 ? 0 : t[i - 1];
        std::uint32_t rj = j == 0 ? 0 : r[j - 1];
        return ti + rj;
      });
}

// The quadratic form x^T A x as a polynomial in dim(A) variables.
inline MultiPoly quadratic_form_poly(const ExactMatrix& a) {
  if (!a.is_symmetric())
    throw std::invalid_argument("quadratic_form_poly: matrix must be symmetric");
  const std::size_t d = a.dim();
  MultiPoly p(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (a.at(i, j).is_zero()) continue;
      ExponentVector e(d, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, a.at(i, j));
    }
  return p;
}

}  // namespace moments
