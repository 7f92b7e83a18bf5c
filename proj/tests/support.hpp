// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared random generators for the test suite. All call sites pass an
// explicitly seeded engine so every run is deterministic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "moments/multipoly.hpp"
#include "moments/rational.hpp"

namespace testsupport {

inline moments::Rational random_rational(std::mt19937_64& rng, long long lo = -6,
                                         long long hi = 6, long long max_den = 4) {
  std::uniform_int_distribution<long long> num(lo, hi);
  std::uniform_int_distribution<long long> den(1, max_den);
  return moments::Rational(num(rng), den(rng));
}

// Sparse polynomial with up to `max_terms` monomials of total degree <= deg.
// Zero coefficients are simply skipped, so the result may have fewer terms.
inline moments::MultiPoly random_sparse_poly(std::mt19937_64& rng, std::size_t d,
                                             unsigned deg, std::size_t max_terms) {
  moments::MultiPoly p(d);
  std::uniform_int_distribution<unsigned> total_deg(0, deg);
  std::uniform_int_distribution<std::size_t> which_var(0, d - 1);
  for (std::size_t t = 0; t < max_terms; ++t) {
    moments::ExponentVector e(d, 0);
    unsigned total = total_deg(rng);
    for (unsigned k = 0; k < total; ++k) ++e[which_var(rng)];
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline std::vector<moments::Rational> random_point(std::mt19937_64& rng, std::size_t d,
                                                   long long lo = -5, long long hi = 5,
                                                   long long max_den = 3) {
  std::vector<moments::Rational> pt;
  pt.reserve(d);
  for (std::size_t i = 0; i < d; ++i) pt.push_back(random_rational(rng, lo, hi, max_den));
  return pt;
}

// Average of p over all coordinate permutations of pt, computed directly from
// evaluations. Independent oracle for symmetrize().
inline moments::Rational symmetrized_eval(const moments::MultiPoly& p,
                                          const std::vector<moments::Rational>& pt) {
  std::vector<std::size_t> pi(pt.size());
  std::iota(pi.begin(), pi.end(), 0);
  moments::Rational sum(0);
  long long count = 0;
  do {
    std::vector<moments::Rational> v(pt.size());
    for (std::size_t l = 0; l < pt.size(); ++l) v[l] = pt[pi[l]];
    sum = sum + p.eval(v);
    ++count;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return sum / moments::Rational(count);
}

}  // namespace testsupport
