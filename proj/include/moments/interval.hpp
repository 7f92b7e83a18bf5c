// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Intervals of the form [c - v*sqrt(w), c + v*sqrt(w)] with rational c, v and
// a nonnegative integer radicand w. Endpoint sum 2c and product c^2 - v^2 w
// are rational, so interval moment criteria stay exact even for surd
// endpoints; endpoint sign tests compare c^2 against v^2 w.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "moments/rational.hpp"

namespace moments {

class QuadraticInterval {
 public:
  QuadraticInterval() : c_(0), v_(0), w_(0) {}

  QuadraticInterval(Rational c, Rational v, std::uint64_t w)
      : c_(std::move(c)), v_(std::move(v)), w_(w) {
    if (v_.sign() < 0) throw std::invalid_argument("QuadraticInterval: v must be >= 0");
    normalize();
  }

  static QuadraticInterval from_rational_endpoints(const Rational& lo, const Rational& hi) {
    if (lo > hi)
      throw std::invalid_argument("QuadraticInterval: endpoints out of order");
    return QuadraticInterval((lo + hi) / Rational(2), (hi - lo) / Rational(2), 1);
  }

  static QuadraticInterval point(const Rational& x) { return QuadraticInterval(x, Rational(0), 0); }

  const Rational& c() const { return c_; }
  const Rational& v() const { return v_; }
  std::uint64_t w() const { return w_; }

  bool is_point() const { return v_.is_zero(); }
  bool has_rational_endpoints() const { return w_ <= 1; }

  // Rational endpoints are only defined when w <= 1.
  Rational lower_rational() const { return w_ == 0 ? c_ : c_ - v_; }
  Rational upper_rational() const { return w_ == 0 ? c_ : c_ + v_; }

  // Endpoint sum a + b and product a * b, always rational.
  Rational endpoint_sum() const { return c_ + c_; }
  Rational endpoint_product() const {
    return c_ * c_ - v_ * v_ * Rational(static_cast<long long>(w_));
  }

  // Sign of (c - v*sqrt(w)) - r, exactly.
  int cmp_lower(const Rational& r) const {
    Rational t = c_ - r;
    if (v_.is_zero()) return t.sign();
    if (t.sign() <= 0) return -1;  // t - positive surd with t <= 0
    Rational d = t * t - v_ * v_ * Rational(static_cast<long long>(w_));
    return d.sign();
  }

  // Sign of (c + v*sqrt(w)) - r, exactly.
  int cmp_upper(const Rational& r) const {
    Rational t = c_ - r;
    if (v_.is_zero()) return t.sign();
    if (t.sign() >= 0) return 1;
    Rational d = v_ * v_ * Rational(static_cast<long long>(w_)) - t * t;
    return d.sign();
  }

  bool operator==(const QuadraticInterval& o) const {
    return c_ == o.c_ && v_ == o.v_ && w_ == o.w_;
  }
  bool operator!=(const QuadraticInterval& o) const { return !(*this == o); }

  std::string to_string() const {
    if (is_point()) return "[" + c_.to_string() + ", " + c_.to_string() + "]";
    if (w_ == 1)
      return "[" + (c_ - v_).to_string() + ", " + (c_ + v_).to_string() + "]";
    std::string surd = v_.to_string() + "*sqrt(" + std::to_string(w_) + ")";
    return "[" + c_.to_string() + " - " + surd + ", " + c_.to_string() + " + " + surd + "]";
  }

 private:
  // Canonical form: a point is stored as (c, 0, 0); square factors of w are
  // folded into v so equal intervals compare equal structurally.
  void normalize() {
    if (v_.is_zero() || w_ == 0) {
      v_ = Rational(0);
      w_ = 0;
      return;
    }
    std::uint64_t square = 1, rest = w_;
    // Trial division is capped; radicands at practical scale are tiny.
    for (std::uint64_t f = 2; f * f <= rest && f <= 1000000; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        square *= f;
      }
    }
    if (square > 1) {
      v_ *= Rational(static_cast<long long>(square));
      w_ = rest;
    }
  }

  Rational c_;
  Rational v_;
  std::uint64_t w_;
};

namespace detail {

// Element x + y*sqrt(w) of the quadratic field Q[sqrt(w)].
struct QuadPair {
  Rational x, y;
};

inline QuadPair quad_mul(const QuadPair& a, const QuadPair& b, std::uint64_t w) {
  Rational rw(static_cast<long long>(w));
  return {a.x * b.x + a.y * b.y * rw, a.x * b.y + a.y * b.x};
}

inline QuadPair quad_pow(QuadPair a, unsigned d, std::uint64_t w) {
  QuadPair r{Rational(1), Rational(0)};
  for (unsigned i = 0; i < d; ++i) r = quad_mul(r, a, w);
  return r;
}

}  // namespace detail

// Image of [a, b] under the d-th power map rule for interval moment
// sequences:
//   (i)   a >= 0             -> [a^d, b^d]
//   (ii)  b <= 0             -> [-|a|^d, -|b|^d]
//   (iv)  -1 <= a <= 0 <= b <= 1 -> [a, b] unchanged
//   (iii) a <= 0 <= b otherwise  -> [-|a|^d, b^d]
// Cases (i), (ii) and odd-d (iii) map conjugate endpoints to conjugate
// endpoints, so the image stays inside Q[sqrt(w)]. Even-d case (iii) with
// irrational endpoints leaves the field and is rejected.
inline QuadraticInterval map_interval(const QuadraticInterval& iv, unsigned d) {
  if (d == 0) throw std::invalid_argument("map_interval: d must be positive");
  if (d == 1) return iv;

  const int sign_a = iv.cmp_lower(Rational(0));
  const int sign_b = iv.cmp_upper(Rational(0));

  if (iv.has_rational_endpoints()) {
    Rational a = iv.lower_rational(), b = iv.upper_rational();
    if (sign_a >= 0) return QuadraticInterval::from_rational_endpoints(a.pow(d), b.pow(d));
    if (sign_b <= 0)
      return QuadraticInterval::from_rational_endpoints(-(a.abs().pow(d)), -(b.abs().pow(d)));
    if (iv.cmp_lower(Rational(-1)) >= 0 && iv.cmp_upper(Rational(1)) <= 0) return iv;
    return QuadraticInterval::from_rational_endpoints(-(a.abs().pow(d)), b.pow(d));
  }

  const std::uint64_t w = iv.w();
  const detail::QuadPair b{iv.c(), iv.v()};        // b = c + v*sqrt(w)
  const detail::QuadPair neg_a{-iv.c(), iv.v()};   // |a| when a <= 0

  if (sign_a >= 0) {
    // b^d = X + Y*sqrt(w) and a^d is its conjugate; Y >= 0 since a^d <= b^d.
    detail::QuadPair bp = detail::quad_pow(b, d, w);
    return QuadraticInterval(bp.x, bp.y, w);
  }
  if (sign_b <= 0) {
    // |a|^d = X + Y*sqrt(w), |b|^d its conjugate; image is [-X - Y*sqrt(w),
    // -X + Y*sqrt(w)].
    detail::QuadPair ap = detail::quad_pow(neg_a, d, w);
    return QuadraticInterval(-ap.x, ap.y, w);
  }
  if (iv.cmp_lower(Rational(-1)) >= 0 && iv.cmp_upper(Rational(1)) <= 0) return iv;
  if (d % 2 == 1) {
    // Odd power: -|a|^d = a^d, so the image endpoints are again the
    // conjugate pair (a^d, b^d).
    detail::QuadPair bp = detail::quad_pow(b, d, w);
    return QuadraticInterval(bp.x, bp.y, w);
  }
  throw std::domain_error(
      "map_interval: image [-|a|^d, b^d] with even d and irrational endpoints "
      "does not lie in Q[sqrt(" +
      std::to_string(w) + ")] and cannot be represented exactly");
}

}  // namespace moments
