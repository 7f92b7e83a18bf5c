// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Sequence prefixes: every catalog family is checked against a second,
// independent recurrence, so a bug in either route cannot hide.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "moments/sequence.hpp"
#include "support.hpp"

using moments::CombineMode;
using moments::QuadraticInterval;
using moments::Rational;
using moments::SequencePrefix;
using moments::catalog;

namespace {

std::vector<Rational> ints(std::initializer_list<long long> xs) {
  std::vector<Rational> v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("catalan numbers satisfy the convolution recurrence", "[sequence][catalog]") {
  SequencePrefix c = catalog("catalan", 16);
  CHECK(std::vector<Rational>(c.values.begin(), c.values.begin() + 7) ==
        ints({1, 1, 2, 5, 14, 42, 132}));
  for (std::size_t n = 0; n + 1 < c.size(); ++n) {
    Rational conv(0);
    for (std::size_t k = 0; k <= n; ++k) conv = conv + c.at(k) * c.at(n - k);
    CHECK(c.at(n + 1) == conv);
  }
  CHECK(c.label == "catalan");
}

TEST_CASE("catalan_shifted drops the leading term", "[sequence][catalog]") {
  SequencePrefix s = catalog("catalan_shifted", 7);
  CHECK(s.values == ints({1, 2, 5, 14, 42, 132, 429}));
  SequencePrefix c = catalog("catalan", 8);
  for (std::size_t n = 0; n < 7; ++n) CHECK(s.at(n) == c.at(n + 1));
}

TEST_CASE("central binomial numbers satisfy the multiplicative recurrence",
          "[sequence][catalog]") {
  SequencePrefix b = catalog("central_binomial", 14);
  CHECK(std::vector<Rational>(b.values.begin(), b.values.begin() + 7) ==
        ints({1, 2, 6, 20, 70, 252, 924}));
  for (std::size_t n = 0; n + 1 < b.size(); ++n) {
    Rational ratio = Rational(4 * static_cast<long long>(n) + 2) /
                     Rational(static_cast<long long>(n) + 1);
    CHECK(b.at(n + 1) == b.at(n) * ratio);
  }
}

TEST_CASE("fine numbers satisfy the three-term recurrence", "[sequence][catalog]") {
  SequencePrefix f = catalog("fine", 14);
  CHECK(std::vector<Rational>(f.values.begin(), f.values.begin() + 7) ==
        ints({1, 0, 1, 2, 6, 18, 57}));
  // 2(n+1) F_n = (7n-5) F_{n-1} + (4n-2) F_{n-2} for n >= 2.
  for (std::size_t n = 2; n < f.size(); ++n) {
    long long nn = static_cast<long long>(n);
    CHECK(Rational(2 * (nn + 1)) * f.at(n) ==
          Rational(7 * nn - 5) * f.at(n - 1) + Rational(4 * nn - 2) * f.at(n - 2));
  }
}

TEST_CASE("hexagonal family satisfies the shifted convolution", "[sequence][catalog]") {
  SequencePrefix h = catalog("hexagonal", 14);
  CHECK(std::vector<Rational>(h.values.begin(), h.values.begin() + 7) ==
        ints({1, 3, 10, 36, 137, 543, 2219}));
  // h_n = 3 h_{n-1} + sum_{j=0}^{n-2} h_j h_{n-2-j}, independent of the
  // P-recurrence the generator uses.
  for (std::size_t n = 1; n < h.size(); ++n) {
    Rational conv(0);
    for (std::size_t j = 0; j + 2 <= n; ++j) conv = conv + h.at(j) * h.at(n - 2 - j);
    CHECK(h.at(n) == Rational(3) * h.at(n - 1) + conv);
  }
}

TEST_CASE("central delannoy numbers satisfy the P-recurrence", "[sequence][catalog]") {
  SequencePrefix d = catalog("delannoy_central", 14);
  CHECK(std::vector<Rational>(d.values.begin(), d.values.begin() + 7) ==
        ints({1, 3, 13, 63, 321, 1683, 8989}));
  // n D_n = 3(2n-1) D_{n-1} - (n-1) D_{n-2}; the generator sums binomials.
  for (std::size_t n = 2; n < d.size(); ++n) {
    long long nn = static_cast<long long>(n);
    CHECK(Rational(nn) * d.at(n) ==
          Rational(3 * (2 * nn - 1)) * d.at(n - 1) - Rational(nn - 1) * d.at(n - 2));
  }
}

TEST_CASE("large schroder numbers satisfy the convolution recurrence",
          "[sequence][catalog]") {
  SequencePrefix r = catalog("schroder_large", 14);
  CHECK(std::vector<Rational>(r.values.begin(), r.values.begin() + 7) ==
        ints({1, 2, 6, 22, 90, 394, 1806}));
  // r_{n+1} = r_n + sum_{k=0}^{n} r_k r_{n-k}.
  for (std::size_t n = 0; n + 1 < r.size(); ++n) {
    Rational conv(0);
    for (std::size_t k = 0; k <= n; ++k) conv = conv + r.at(k) * r.at(n - k);
    CHECK(r.at(n + 1) == r.at(n) + conv);
  }
}

TEST_CASE("little schroder numbers: convolution and the doubling relation",
          "[sequence][catalog]") {
  SequencePrefix s = catalog("schroder_little", 13);
  CHECK(std::vector<Rational>(s.values.begin(), s.values.begin() + 7) ==
        ints({1, 3, 11, 45, 197, 903, 4279}));

  // The catalog exposes (S_1, S_2, ...) of the classical super-Catalan
  // numbers S = 1, 1, 3, 11, ...; rebuild S by its convolution recurrence
  // S_{n+1} = 2 sum_{k=0}^{n} S_k S_{n-k} - S_n and compare.
  std::vector<Rational> S{Rational(1), Rational(1)};
  while (S.size() < 14) {
    std::size_t n = S.size() - 1;
    Rational conv(0);
    for (std::size_t k = 0; k <= n; ++k) conv = conv + S[k] * S[n - k];
    S.push_back(Rational(2) * conv - S[n]);
  }
  for (std::size_t n = 0; n < s.size(); ++n) CHECK(s.at(n) == S[n + 1]);

  // Doubling relation against the large family: r_n = 2 S_n for n >= 1.
  SequencePrefix r = catalog("schroder_large", 14);
  for (std::size_t n = 1; n < r.size(); ++n) CHECK(r.at(n) == Rational(2) * s.at(n - 1));
}

TEST_CASE("geometric and dirac families are power sequences", "[sequence][catalog]") {
  SequencePrefix g = catalog("geometric(5/2)", 6);
  CHECK(g.values == std::vector<Rational>{Rational(1), Rational(5, 2), Rational(25, 4),
                                          Rational(125, 8), Rational(625, 16),
                                          Rational(3125, 32)});
  CHECK(g.label == "geometric(5/2)");
  REQUIRE(g.claimed_support.has_value());
  CHECK(g.claimed_support->is_point());
  CHECK(g.claimed_support->lower_rational() == Rational(5, 2));

  SequencePrefix d = catalog("dirac(3)", 4);
  CHECK(d.values == ints({1, 3, 9, 27}));
  CHECK(catalog("geometric(-2)", 4).values == ints({1, -2, 4, -8}));
}

TEST_CASE("catalog support claims", "[sequence][catalog]") {
  const QuadraticInterval zero_four(Rational(2), Rational(2), 1);
  const QuadraticInterval one_five(Rational(3), Rational(2), 1);
  const QuadraticInterval surd(Rational(3), Rational(2), 2);
  for (const char* name : {"catalan", "catalan_shifted", "central_binomial", "fine"})
    CHECK(catalog(name, 3).claimed_support == zero_four);
  CHECK(catalog("hexagonal", 3).claimed_support == one_five);
  for (const char* name : {"delannoy_central", "schroder_large", "schroder_little"})
    CHECK(catalog(name, 3).claimed_support == surd);
  CHECK(zero_four.has_rational_endpoints());
  CHECK_FALSE(surd.has_rational_endpoints());
}

TEST_CASE("catalog rejects unknown names and zero length", "[sequence][catalog]") {
  CHECK_THROWS_AS(catalog("motzkin", 5), std::invalid_argument);
  CHECK_THROWS_AS(catalog("catalan", 0), std::invalid_argument);
  CHECK_THROWS_AS(catalog("geometric(1/0)", 3), std::invalid_argument);
  CHECK_THROWS_AS(catalog("geometric(", 3), std::invalid_argument);
}

TEST_CASE("shift drops leading moments and tracks the support claim", "[sequence]") {
  SequencePrefix c = catalog("catalan", 8);
  SequencePrefix s1 = moments::shift(c, 1);
  CHECK(s1.size() == 7);
  for (std::size_t n = 0; n < s1.size(); ++n) CHECK(s1.at(n) == c.at(n + 1));
  // Support in [0, 4] survives: x^k d(mu) is still a measure on [0, 4].
  CHECK(s1.claimed_support == c.claimed_support);
  CHECK(moments::shift(moments::shift(c, 1), 2).values == moments::shift(c, 3).values);

  // A support touching negative reals does not survive a shift.
  SequencePrefix g = catalog("geometric(-1)", 6);
  CHECK_FALSE(moments::shift(g, 1).claimed_support.has_value());

  CHECK_THROWS_AS(moments::shift(c, 8), std::invalid_argument);
}

TEST_CASE("combine is termwise in both modes", "[sequence]") {
  SequencePrefix a;
  a.values = ints({1, 1});
  SequencePrefix b;
  b.values = ints({1, 2});
  CHECK(moments::combine(a, b, Rational(1), CombineMode::linear).values == ints({2, 3}));
  CHECK(moments::combine(a, b, Rational(0), CombineMode::linear).values == a.values);

  std::mt19937_64 rng(20260320);
  SequencePrefix x = catalog("catalan", 10);
  SequencePrefix y = catalog("central_binomial", 8);
  Rational theta = testsupport::random_rational(rng);
  SequencePrefix lin = moments::combine(x, y, theta, CombineMode::linear);
  SequencePrefix prod = moments::combine(x, y, theta, CombineMode::product);
  REQUIRE(lin.size() == 8);  // truncated to the shorter input
  REQUIRE(prod.size() == 8);
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(lin.at(n) == x.at(n) + theta * y.at(n));
    CHECK(prod.at(n) == x.at(n) * y.at(n));
  }
}

TEST_CASE("interval transform matches the defining formula", "[sequence]") {
  std::mt19937_64 rng(20260321);
  for (int i = 0; i < 50; ++i) {
    SequencePrefix a;
    for (int n = 0; n < 9; ++n) a.values.push_back(testsupport::random_rational(rng));
    Rational s = testsupport::random_rational(rng);
    Rational q = testsupport::random_rational(rng);
    SequencePrefix beta = moments::interval_transform(a, s, q);
    REQUIRE(beta.size() == 7);
    for (std::size_t n = 0; n < beta.size(); ++n)
      CHECK(beta.at(n) == s * a.at(n + 1) - a.at(n + 2) - q * a.at(n));
  }

  // The endpoint data of [1, 2] annihilates the geometric sequence 2^n.
  SequencePrefix g = catalog("geometric(2)", 8);
  SequencePrefix z = moments::interval_transform(g, Rational(3), Rational(2));
  for (std::size_t n = 0; n < z.size(); ++n) CHECK(z.at(n) == Rational(0));

  SequencePrefix tiny;
  tiny.values = ints({1, 2});
  CHECK_THROWS_AS(moments::interval_transform(tiny, Rational(1), Rational(0)),
                  std::invalid_argument);
}
