// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Hankel matrices and the moment-criterion verifiers: Hamburger, Stieltjes,
// total nonnegativity, and interval criteria. Every verdict is exact; a fail
// always carries a witness with a strictly negative exact value.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moments/interval.hpp"
#include "moments/matrix.hpp"
#include "moments/sequence.hpp"

namespace moments {

struct CheckReport {
  struct Witness {
    std::size_t m = 0;
    std::string detail;
    Rational value;
  };

  bool pass = false;
  std::string criterion;
  std::size_t depth_checked = 0;
  std::optional<Witness> witness;
};

// (m+1) x (m+1) matrix with entry (j, k) = alpha_{j+k+offset}; offset 1 is
// the Hankel matrix of the shifted sequence E(alpha).
inline ExactMatrix hankel_matrix(const SequencePrefix& alpha, std::size_t m, int offset) {
  if (offset != 0 && offset != 1)
    throw std::invalid_argument("hankel_matrix: offset must be 0 or 1");
  if (alpha.size() < 2 * m + 1 + static_cast<std::size_t>(offset))
    throw std::invalid_argument("hankel_matrix: prefix too short for order " +
                                std::to_string(m));
  ExactMatrix h(m + 1);
  for (std::size_t j = 0; j <= m; ++j)
    for (std::size_t k = 0; k <= m; ++k)
      h.at(j, k) = alpha.values[j + k + static_cast<std::size_t>(offset)];
  return h;
}

// Largest depth each verifier can reach on a prefix of the given length.
inline std::size_t max_hamburger_depth(std::size_t len) {
  if (len < 1) throw std::invalid_argument("max_hamburger_depth: empty prefix");
  return (len - 1) / 2;
}
inline std::size_t max_stieltjes_depth(std::size_t len) {
  if (len < 2) throw std::invalid_argument("max_stieltjes_depth: prefix too short");
  return (len - 2) / 2;
}
inline std::size_t max_interval_depth(std::size_t len) {
  if (len < 3) throw std::invalid_argument("max_interval_depth: prefix too short");
  return (len - 3) / 2;
}

namespace detail {

// First violated characteristic coefficient of a non-PSD symmetric matrix:
// the smallest k with (-1)^k c_k < 0, reported as that signed value.
inline std::optional<std::pair<std::size_t, Rational>> psd_violation(const ExactMatrix& h) {
  PsdResult r = is_psd(h);
  if (r.psd) return std::nullopt;
  for (std::size_t k = 1; k <= r.char_coeffs.size(); ++k) {
    Rational signed_coeff = (k % 2 == 0) ? r.char_coeffs[k - 1] : -r.char_coeffs[k - 1];
    if (signed_coeff.sign() < 0) return std::make_pair(k, signed_coeff);
  }
  throw std::logic_error("psd_violation: inconsistent PSD result");
}

inline CheckReport psd_ladder(const SequencePrefix& base, const SequencePrefix& shifted_or_empty,
                              bool two_track, std::size_t depth, const std::string& criterion,
                              const std::string& first_name, const std::string& second_name) {
  CheckReport rep;
  rep.criterion = criterion;
  for (std::size_t m = 0; m <= depth; ++m) {
    const SequencePrefix* tracks[2] = {&base, &shifted_or_empty};
    const std::string* names[2] = {&first_name, &second_name};
    const int track_count = two_track ? 2 : 1;
    for (int t = 0; t < track_count; ++t) {
      auto violation = psd_violation(hankel_matrix(*tracks[t], m, 0));
      if (violation) {
        rep.pass = false;
        rep.depth_checked = m;
        rep.witness = CheckReport::Witness{
            m,
            "H_" + std::to_string(m) + "(" + *names[t] + ") has (-1)^k c_k < 0 at k=" +
                std::to_string(violation->first),
            violation->second};
        return rep;
      }
    }
  }
  rep.pass = true;
  rep.depth_checked = depth;
  return rep;
}

}  // namespace detail

// Pass iff H_m(alpha) is PSD for all m <= depth.
inline CheckReport check_hamburger(const SequencePrefix& alpha, std::size_t depth) {
  if (alpha.size() < 2 * depth + 1)
    throw std::invalid_argument("check_hamburger: prefix too short for depth " +
                                std::to_string(depth));
  return detail::psd_ladder(alpha, alpha, false, depth, "hamburger", "alpha", "alpha");
}

// Pass iff H_m(alpha) and H_m(E alpha) are PSD for all m <= depth.
inline CheckReport check_stieltjes(const SequencePrefix& alpha, std::size_t depth) {
  if (alpha.size() < 2 * depth + 2)
    throw std::invalid_argument("check_stieltjes: prefix too short for depth " +
                                std::to_string(depth));
  return detail::psd_ladder(alpha, shift(alpha, 1), true, depth, "stieltjes", "alpha",
                            "E alpha");
}

// Pass iff the minimum over all minors of H_m(alpha) is nonnegative.
inline CheckReport check_total_nonneg(const SequencePrefix& alpha, std::size_t m,
                                      std::uint64_t budget) {
  ExactMatrix h = hankel_matrix(alpha, m, 0);
  MinorResult min = min_minor(h, budget);
  CheckReport rep;
  rep.criterion = "total_nonneg";
  rep.depth_checked = m;
  rep.pass = min.value.sign() >= 0;
  if (!rep.pass) {
    std::string detail = "minor rows={";
    for (std::size_t i = 0; i < min.rows.size(); ++i)
      detail += (i ? "," : "") + std::to_string(min.rows[i]);
    detail += "} cols={";
    for (std::size_t i = 0; i < min.cols.size(); ++i)
      detail += (i ? "," : "") + std::to_string(min.cols[i]);
    detail += "} of H_" + std::to_string(m) + "(alpha)";
    rep.witness = CheckReport::Witness{m, detail, min.value};
  }
  return rep;
}

// Pass iff H_m(alpha) and H_m(s*E(alpha) - E(E(alpha)) - q*alpha) are PSD for
// all m <= depth, with s = 2c and q = c^2 - v^2 w taken from the interval.
inline CheckReport check_interval(const SequencePrefix& alpha, const QuadraticInterval& iv,
                                  std::size_t depth) {
  if (alpha.size() < 2 * depth + 3)
    throw std::invalid_argument("check_interval: prefix too short for depth " +
                                std::to_string(depth));
  SequencePrefix beta = interval_transform(alpha, iv.endpoint_sum(), iv.endpoint_product());
  CheckReport rep =
      detail::psd_ladder(alpha, beta, true, depth, "interval", "alpha", "beta");
  return rep;
}

}  // namespace moments
