// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Finite moment-sequence prefixes, the shift/combination operators, and the
// catalog of combinatorial sequences. Each catalog entry is produced by an
// exact integer recurrence; the claimed support interval is metadata only and
// is never assumed by any verifier.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moments/interval.hpp"
#include "moments/rational.hpp"

namespace moments {

struct SequencePrefix {
  std::vector<Rational> values;
  std::optional<QuadraticInterval> claimed_support;
  std::string label;

  std::size_t size() const { return values.size(); }
  const Rational& at(std::size_t n) const {
    if (n >= values.size()) throw std::out_of_range("SequencePrefix: index out of range");
    return values[n];
  }
};

enum class CombineMode { linear, product };

inline SequencePrefix shift(const SequencePrefix& alpha, std::size_t k) {
  if (k >= alpha.size())
    throw std::invalid_argument("shift: k must be smaller than the prefix length");
  SequencePrefix out;
  out.values.assign(alpha.values.begin() + static_cast<std::ptrdiff_t>(k),
                    alpha.values.end());
  // A support claim [a, b] survives shifting only when a >= 0, where the
  // shifted sequence has representing measure x^k d(mu).
  if (alpha.claimed_support && alpha.claimed_support->cmp_lower(Rational(0)) >= 0)
    out.claimed_support = alpha.claimed_support;
  out.label = alpha.label;
  return out;
}

inline SequencePrefix combine(const SequencePrefix& alpha, const SequencePrefix& beta,
                              const Rational& theta, CombineMode mode) {
  const std::size_t n = std::min(alpha.size(), beta.size());
  if (n == 0) throw std::invalid_argument("combine: empty result");
  SequencePrefix out;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.values.push_back(mode == CombineMode::linear
                             ? alpha.values[i] + theta * beta.values[i]
                             : alpha.values[i] * beta.values[i]);
  return out;
}

// beta_n = s*alpha_{n+1} - alpha_{n+2} - q*alpha_n for every index where all
// three terms exist, i.e. two values shorter than the input.
inline SequencePrefix interval_transform(const SequencePrefix& alpha, const Rational& s,
                                         const Rational& q) {
  if (alpha.size() < 3)
    throw std::invalid_argument("interval_transform: prefix needs at least 3 values");
  SequencePrefix out;
  out.values.reserve(alpha.size() - 2);
  for (std::size_t n = 0; n + 2 < alpha.size(); ++n)
    out.values.push_back(s * alpha.values[n + 1] - alpha.values[n + 2] -
                         q * alpha.values[n]);
  return out;
}

namespace detail {

inline std::vector<Rational> catalan_values(std::size_t len) {
  // C_{n+1} = C_n * (4n + 2) / (n + 2); the quotient is exact.
  std::vector<Rational> v;
  v.reserve(len);
  Rational c(1);
  for (std::size_t n = 0; n < len; ++n) {
    v.push_back(c);
    c = c * Rational(4 * static_cast<long long>(n) + 2) /
        Rational(static_cast<long long>(n) + 2);
  }
  return v;
}

inline std::vector<Rational> central_binomial_values(std::size_t len) {
  // Row sums of the Pascal recurrence: a_n = C(2n, n) built additively.
  std::vector<Rational> v;
  v.reserve(len);
  std::vector<BigInt> row{1};
  for (std::size_t n = 0; n < len; ++n) {
    v.push_back(Rational(row[n]));
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    std::vector<BigInt> after(next.size() + 1, 0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      after[i] += next[i];
      after[i + 1] += next[i];
    }
    row = std::move(after);
  }
  return v;
}

inline std::vector<Rational> fine_values(std::size_t len) {
  // F_0 = 1, F_n = (C_n - F_{n-1}) / 2 against the Catalan numbers.
  std::vector<Rational> cat = catalan_values(len == 0 ? 0 : len);
  std::vector<Rational> v;
  v.reserve(len);
  for (std::size_t n = 0; n < len; ++n)
    v.push_back(n == 0 ? Rational(1) : (cat[n] - v[n - 1]) / Rational(2));
  return v;
}

inline std::vector<Rational> hexagonal_values(std::size_t len) {
  // Counts of restricted hexagonal polyominoes, shifted to start 1, 3, 10,
  // 36, ...: internally a_0 = a_1 = 1 and
  //   (n + 2) a_{n+1} = 3 (2n + 1) a_n - 5 (n - 1) a_{n-1},
  // and the catalog exposes (a_1, a_2, ...).
  std::vector<Rational> a{Rational(1), Rational(1)};
  while (a.size() < len + 1) {
    std::size_t n = a.size() - 1;
    Rational next = (Rational(3) * Rational(2 * static_cast<long long>(n) + 1) * a[n] -
                     Rational(5) * Rational(static_cast<long long>(n) - 1) * a[n - 1]) /
                    Rational(static_cast<long long>(n) + 2);
    a.push_back(next);
  }
  return std::vector<Rational>(a.begin() + 1, a.begin() + 1 + static_cast<std::ptrdiff_t>(len));
}

inline std::vector<Rational> delannoy_central_values(std::size_t len) {
  // D_n = sum_k C(n,k)^2 2^k with binomials accumulated along Pascal rows.
  std::vector<Rational> v;
  v.reserve(len);
  std::vector<BigInt> row{1};
  for (std::size_t n = 0; n < len; ++n) {
    BigInt acc = 0, p2 = 1;
    for (const BigInt& b : row) {
      acc += b * b * p2;
      p2 *= 2;
    }
    v.push_back(Rational(acc));
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  return v;
}

inline std::vector<Rational> schroder_p_recurrence(std::size_t len, const Rational& a1) {
  // (n + 1) a_n = 3 (2n - 1) a_{n-1} - (n - 2) a_{n-2} for n >= 2, a_0 = 1.
  std::vector<Rational> v{Rational(1), a1};
  while (v.size() < len) {
    std::size_t n = v.size();
    Rational next = (Rational(3) * Rational(2 * static_cast<long long>(n) - 1) * v[n - 1] -
                     Rational(static_cast<long long>(n) - 2) * v[n - 2]) /
                    Rational(static_cast<long long>(n) + 1);
    v.push_back(next);
  }
  v.resize(len);
  return v;
}

inline std::vector<Rational> power_values(const Rational& ratio, std::size_t len) {
  std::vector<Rational> v;
  v.reserve(len);
  Rational x(1);
  for (std::size_t n = 0; n < len; ++n) {
    v.push_back(x);
    x *= ratio;
  }
  return v;
}

}  // namespace detail

// Catalog names: catalan, catalan_shifted, central_binomial, fine, hexagonal,
// delannoy_central, schroder_large, schroder_little, geometric(ratio),
// dirac(xi).
inline SequencePrefix catalog(const std::string& name, std::size_t len) {
  if (len == 0) throw std::invalid_argument("catalog: len must be positive");
  SequencePrefix out;
  out.label = name;
  const QuadraticInterval zero_four(Rational(2), Rational(2), 1);
  const QuadraticInterval one_five(Rational(3), Rational(2), 1);
  const QuadraticInterval surd(Rational(3), Rational(2), 2);

  if (name == "catalan") {
    out.values = detail::catalan_values(len);
    out.claimed_support = zero_four;
  } else if (name == "catalan_shifted") {
    std::vector<Rational> c = detail::catalan_values(len + 1);
    out.values.assign(c.begin() + 1, c.end());
    out.claimed_support = zero_four;
  } else if (name == "central_binomial") {
    out.values = detail::central_binomial_values(len);
    out.claimed_support = zero_four;
  } else if (name == "fine") {
    out.values = detail::fine_values(len);
    out.claimed_support = zero_four;
  } else if (name == "hexagonal") {
    out.values = detail::hexagonal_values(len);
    out.claimed_support = one_five;
  } else if (name == "delannoy_central") {
    out.values = detail::delannoy_central_values(len);
    out.claimed_support = surd;
  } else if (name == "schroder_large") {
    out.values = detail::schroder_p_recurrence(len, Rational(2));
    out.claimed_support = surd;
  } else if (name == "schroder_little") {
    // Offset chosen so the surd support claim holds: 1, 3, 11, 45, ...
    std::vector<Rational> s = detail::schroder_p_recurrence(len + 1, Rational(1));
    out.values.assign(s.begin() + 1, s.end());
    out.claimed_support = surd;
  } else if (name.rfind("geometric(", 0) == 0 && name.back() == ')') {
    Rational ratio = Rational::parse(name.substr(10, name.size() - 11));
    out.values = detail::power_values(ratio, len);
    out.claimed_support = QuadraticInterval::point(ratio);
  } else if (name.rfind("dirac(", 0) == 0 && name.back() == ')') {
    Rational xi = Rational::parse(name.substr(6, name.size() - 7));
    out.values = detail::power_values(xi, len);
    out.claimed_support = QuadraticInterval::point(xi);
  } else {
    throw std::invalid_argument("catalog: unknown sequence name '" + name + "'");
  }
  return out;
}

}  // namespace moments
