// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tour: build a catalog sequence, run a polynomial transform,
// check the transform's polynomial for orthant nonnegativity, verify moment
// criteria on the result, and map an interval through a power transform.

#include <iostream>

#include "moments/cli.hpp"

using namespace moments;

static void print_seq(const char* tag, const SequencePrefix& s, std::size_t count) {
  std::cout << tag << ":";
  for (std::size_t i = 0; i < count && i < s.size(); ++i)
    std::cout << " " << s.values[i].to_string();
  std::cout << "\n";
}

int main() {
  SequencePrefix cat = catalog("catalan", 16);
  print_seq("catalan", cat, 8);

  // The 2x2 Hankel determinant sequence via T_p with p = 1/2*(x-y)^2.
  MultiPoly p = parse_poly("1/2*(x-y)^2", 2);
  SequencePrefix hankel_dets = apply_tp(p, cat);
  print_seq("T_p(catalan)", hankel_dets, 8);

  // p is symmetric, so it equals its symmetrization.
  std::cout << "p == symmetrize(p): " << (p == p.symmetrize() ? "yes" : "no") << "\n";

  // Orthant nonnegativity evidence for p, the transform's hypothesis.
  PositivityVerdict pv = check_nonneg(p, DomainSpec::orthant(2), 1000000);
  std::cout << "p on the orthant: "
            << (pv.counterexample ? "counterexample" : "no counterexample") << " (route "
            << pv.route << ", min sampled " << pv.min_sampled.to_string() << ")\n";

  // The transformed sequence is again a Stieltjes moment sequence.
  CheckReport stieltjes = check_stieltjes(hankel_dets, 3);
  std::cout << "stieltjes(T_p(catalan), depth 3): " << (stieltjes.pass ? "pass" : "fail")
            << "\n";

  // Power transforms map supports through interval powers: [0,4] -> [0,16].
  QuadraticInterval zero_four = QuadraticInterval::from_rational_endpoints(Rational(0), Rational(4));
  std::cout << "[0,4]^2 = " << map_interval(zero_four, 2).to_string() << "\n";
  CheckReport interval = check_interval(hankel_dets, map_interval(zero_four, 2), 3);
  std::cout << "interval(T_p(catalan), [0,16], depth 3): "
            << (interval.pass ? "pass" : "fail") << "\n";

  // A failing control: 5^n cannot be a [0,4]-moment sequence.
  CheckReport control = check_interval(catalog("geometric(5)", 7), zero_four, 2);
  std::cout << "interval(5^n, [0,4]): " << (control.pass ? "pass" : "fail");
  if (control.witness)
    std::cout << " (witness " << control.witness->value.to_string() << " at m="
              << control.witness->m << ")";
  std::cout << "\n";
  return 0;
}
