// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact dense square matrices over Rational: determinants, characteristic
// polynomials, PSD decisions, and exhaustive minor enumeration.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moments/rational.hpp"

namespace moments {

class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("ExactMatrix: dim must be positive");
  }

  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw std::invalid_argument("ExactMatrix: rows must form a square matrix");
      for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static ExactMatrix identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t dim() const { return dim_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool operator==(const ExactMatrix& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

  // Submatrix on the given (strictly increasing) row and column index sets.
  ExactMatrix submatrix(const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) const {
    if (rows.empty() || rows.size() != cols.size())
      throw std::invalid_argument("submatrix: need equally many rows and cols");
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (rows[i] >= dim_ || cols[j] >= dim_)
          throw std::out_of_range("submatrix: index out of range");
        m.at(i, j) = at(rows[i], cols[j]);
      }
    return m;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix product: dim mismatch");
    ExactMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& a = at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  Rational trace() const {
    Rational t;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  // Exact Gaussian elimination with partial pivoting by nonzero pivot choice.
  Rational determinant() const {
    ExactMatrix a(*this);
    Rational det(1);
    for (std::size_t col = 0; col < dim_; ++col) {
      std::size_t pivot = col;
      while (pivot < dim_ && a.at(pivot, col).is_zero()) ++pivot;
      if (pivot == dim_) return Rational(0);
      if (pivot != col) {
        for (std::size_t j = col; j < dim_; ++j) std::swap(a.at(pivot, j), a.at(col, j));
        det = -det;
      }
      det *= a.at(col, col);
      for (std::size_t row = col + 1; row < dim_; ++row) {
        if (a.at(row, col).is_zero()) continue;
        Rational f = a.at(row, col) / a.at(col, col);
        a.at(row, col) = Rational(0);
        for (std::size_t j = col + 1; j < dim_; ++j) a.at(row, j) -= f * a.at(col, j);
      }
    }
    return det;
  }

  // Coefficients (c_1, ..., c_n) of det(lambda*I - M) = lambda^n + c_1
  // lambda^{n-1} + ... + c_n, by the Faddeev-LeVerrier recurrence
  //   B_1 = M, c_k = -tr(M B_{k-1} + c_{k-1} M)/k applied as
  //   B_{k+1} = M (B_k + c_k I), c_{k+1} = -tr(B_{k+1}) / (k+1).
  std::vector<Rational> char_poly() const {
    std::vector<Rational> coeffs;
    coeffs.reserve(dim_);
    ExactMatrix b(*this);
    Rational c = -b.trace();
    coeffs.push_back(c);
    for (std::size_t k = 2; k <= dim_; ++k) {
      for (std::size_t i = 0; i < dim_; ++i) b.at(i, i) += c;
      b = (*this) * b;
      c = -(b.trace() / Rational(static_cast<long long>(k)));
      coeffs.push_back(c);
    }
    return coeffs;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

struct PsdResult {
  bool psd = false;
  std::vector<Rational> char_coeffs;  // (c_1, ..., c_n)
};

// A real symmetric matrix is PSD iff (-1)^k c_k >= 0 for every k: the c_k are
// (up to sign) elementary symmetric functions of the (real) eigenvalues, so
// the sign pattern excludes any negative root of the characteristic polynomial.
inline PsdResult is_psd(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_psd: matrix must be symmetric");
  PsdResult r;
  r.char_coeffs = m.char_poly();
  r.psd = true;
  for (std::size_t k = 1; k <= r.char_coeffs.size(); ++k) {
    Rational signed_coeff = (k % 2 == 0) ? r.char_coeffs[k - 1] : -r.char_coeffs[k - 1];
    if (signed_coeff.sign() < 0) {
      r.psd = false;
      break;
    }
  }
  return r;
}

struct MinorResult {
  Rational value;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

namespace detail {

// Advances a k-combination of {0,...,n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline BigInt binomial_count(std::size_t n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= static_cast<long long>(n - i);
    r /= static_cast<long long>(i + 1);
  }
  return r;
}

}  // namespace detail

// Total number of nonempty minors of an n x n matrix: sum_k C(n,k)^2.
inline BigInt minor_count(std::size_t n) {
  BigInt total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt c = detail::binomial_count(n, k);
    total += c * c;
  }
  return total;
}

// Enumerates every minor of every order in deterministic order (order
// ascending, then row set lexicographic, then column set lexicographic) and
// returns the minimum with the first attaining index pair.
inline MinorResult min_minor(const ExactMatrix& m, std::uint64_t budget) {
  const std::size_t n = m.dim();
  BigInt needed = minor_count(n);
  if (needed > BigInt(budget))
    throw std::runtime_error("min_minor: budget exceeded, need " + needed.str() +
                             " minors but budget is " + std::to_string(budget));
  MinorResult best;
  bool have = false;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      std::vector<std::size_t> cols(k);
      for (std::size_t i = 0; i < k; ++i) cols[i] = i;
      do {
        Rational d = m.submatrix(rows, cols).determinant();
        if (!have || d < best.value) {
          best.value = d;
          best.rows = rows;
          best.cols = cols;
          have = true;
        }
      } while (detail::next_combination(cols, n));
    } while (detail::next_combination(rows, n));
  }
  return best;
}

}  // namespace moments
