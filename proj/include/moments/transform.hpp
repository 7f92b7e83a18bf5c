// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Sequence-construction operators: the polynomial transform T_p, generalized
// minor sequences, the Riesz functional, the copositive quadratic-form
// sequence, and the Dirac negativity witness.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "moments/matrix.hpp"
#include "moments/multipoly.hpp"
#include "moments/sequence.hpp"

namespace moments {

// Index offsets (r_1,...,r_{d-1}) and (t_1,...,t_{d-1}) of a generalized
// minor; both strictly increasing and positive, d = length + 1 >= 2.
struct MinorSpec {
  std::vector<std::uint32_t> r;
  std::vector<std::uint32_t> t;

  void validate() const {
    detail::check_strictly_increasing_positive(r, "MinorSpec r");
    detail::check_strictly_increasing_positive(t, "MinorSpec t");
    if (r.size() != t.size())
      throw std::invalid_argument("MinorSpec: r and t must have equal length");
  }
};

struct WitnessReport {
  Rational xi;
  Rational value;
  // The Dirac prefix alpha_n = xi^n that value = (T_p alpha)_0 was taken from.
  SequencePrefix prefix;
};

// (T_p alpha)_n = sum over terms p_i of p_i * alpha_{n+i_1} ... alpha_{n+i_d},
// one factor per variable of p including zero exponents. The output stops at
// the last n for which every needed index exists.
inline SequencePrefix apply_tp(const MultiPoly& p, const SequencePrefix& alpha) {
  const std::size_t need = p.max_exponent_entry();
  if (alpha.size() < need + 1)
    throw std::invalid_argument("apply_tp: prefix too short for any output term");
  SequencePrefix out;
  out.values.reserve(alpha.size() - need);
  for (std::size_t n = 0; n + need < alpha.size(); ++n) {
    Rational acc(0);
    for (const auto& [exp, coef] : p.terms()) {
      Rational prod = coef;
      for (std::uint32_t e : exp) prod *= alpha.values[n + e];
      acc += prod;
    }
    out.values.push_back(acc);
  }
  return out;
}

// Term n = det of the d x d matrix with entry (i, j) = alpha_{n + r_j + t_i},
// where r_0 = t_0 = 0. Equals apply_tp(minor_poly(r, t), alpha) termwise.
inline SequencePrefix minor_sequence(const SequencePrefix& alpha, const MinorSpec& spec) {
  spec.validate();
  const std::size_t d = spec.r.size() + 1;
  const std::size_t reach = spec.r.back() + spec.t.back();
  if (alpha.size() < reach + 1)
    throw std::invalid_argument("minor_sequence: prefix too short for any output term");
  auto offset = [](const std::vector<std::uint32_t>& v, std::size_t idx) -> std::size_t {
    return idx == 0 ? 0 : v[idx - 1];
  };
  SequencePrefix out;
  out.values.reserve(alpha.size() - reach);
  for (std::size_t n = 0; n + reach < alpha.size(); ++n) {
    ExactMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m.at(i, j) = alpha.values[n + offset(spec.r, j) + offset(spec.t, i)];
    out.values.push_back(m.determinant());
  }
  return out;
}

// Riesz functional: sum of q_i * alpha_i over the terms of a one-variable q.
inline Rational riesz(const SequencePrefix& alpha, const MultiPoly& q) {
  if (q.num_vars() != 1)
    throw std::invalid_argument("riesz: polynomial must have one variable");
  if (static_cast<std::size_t>(q.total_degree()) >= alpha.size())
    throw std::invalid_argument("riesz: degree exceeds prefix length");
  Rational acc(0);
  for (const auto& [exp, coef] : q.terms()) acc += coef * alpha.values[exp[0]];
  return acc;
}

// alpha~_n = sum_i a_ii alpha_{n+2} alpha_n^{d-1}
//          + sum_{i != j} a_ij alpha_{n+1}^2 alpha_n^{d-2}.
// Equals apply_tp(quadratic_form_poly(A), alpha) termwise.
inline SequencePrefix copositive_form_sequence(const ExactMatrix& a,
                                               const SequencePrefix& alpha) {
  const std::size_t d = a.dim();
  if (d < 2) throw std::invalid_argument("copositive_form_sequence: need d >= 2");
  if (!a.is_symmetric())
    throw std::invalid_argument("copositive_form_sequence: matrix must be symmetric");
  if (alpha.size() < 3)
    throw std::invalid_argument("copositive_form_sequence: prefix needs at least 3 values");
  Rational diag_sum(0), off_sum(0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      (i == j ? diag_sum : off_sum) += a.at(i, j);
  SequencePrefix out;
  out.values.reserve(alpha.size() - 2);
  for (std::size_t n = 0; n + 2 < alpha.size(); ++n) {
    const Rational& a0 = alpha.values[n];
    Rational term = diag_sum * alpha.values[n + 2] * a0.pow(static_cast<unsigned>(d - 1));
    term += off_sum * alpha.values[n + 1] * alpha.values[n + 1] *
            a0.pow(static_cast<unsigned>(d - 2));
    out.values.push_back(term);
  }
  return out;
}

// Builds alpha_n = xi^n and reports value = (T_p alpha)_0 = p(xi). A strictly
// negative value certifies that T_p does not preserve the Stieltjes moment
// property (the one-variable necessity direction).
inline WitnessReport dirac_witness(const MultiPoly& p, const Rational& xi,
                                   std::size_t prefix_len) {
  if (p.num_vars() != 1)
    throw std::invalid_argument("dirac_witness: polynomial must have one variable");
  if (xi.sign() <= 0) throw std::invalid_argument("dirac_witness: xi must be positive");
  if (prefix_len <= static_cast<std::size_t>(p.total_degree()))
    throw std::invalid_argument("dirac_witness: prefix_len must exceed the degree");
  WitnessReport rep;
  rep.xi = xi;
  rep.prefix.values = detail::power_values(xi, prefix_len);
  rep.prefix.label = "dirac(" + xi.to_string() + ")";
  rep.prefix.claimed_support = QuadraticInterval::point(xi);
  rep.value = apply_tp(p, rep.prefix).values[0];
  if (rep.value != p.eval({xi}))
    throw std::logic_error("dirac_witness: transform disagrees with evaluation");
  return rep;
}

}  // namespace moments
