// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization for every CLI-facing value. Output is ordered_json so
// field order is fixed by construction and dumps are byte-identical across
// runs. Readers take what they know and ignore unknown fields; every exact
// value is a "num/den" string, but plain JSON integers are accepted on input.

#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "moments/hankel.hpp"
#include "moments/interval.hpp"
#include "moments/multipoly.hpp"
#include "moments/positivity.hpp"
#include "moments/rational.hpp"
#include "moments/sequence.hpp"
#include "moments/transform.hpp"

namespace moments {

using Json = nlohmann::ordered_json;

inline Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument(what + ": expected a \"num/den\" string or an integer");
}

inline Json rational_list_json(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const Rational& v : values) a.push_back(v.to_string());
  return a;
}

inline Json decimal_list_json(const std::vector<Rational>& values, unsigned digits) {
  Json a = Json::array();
  for (const Rational& v : values) a.push_back(v.to_decimal(digits));
  return a;
}

// Interval / claimed support: {"c": "num/den", "v": "num/den", "w": uint}.
inline Json interval_json(const QuadraticInterval& iv, unsigned decimal_digits = 0) {
  Json j;
  j["c"] = iv.c().to_string();
  if (decimal_digits) j["c_decimal_approx"] = iv.c().to_decimal(decimal_digits);
  j["v"] = iv.v().to_string();
  if (decimal_digits) j["v_decimal_approx"] = iv.v().to_decimal(decimal_digits);
  j["w"] = iv.w();
  return j;
}

inline QuadraticInterval interval_from_json(const Json& j) {
  Rational c = rational_from_json(j.at("c"), "interval c");
  Rational v = rational_from_json(j.at("v"), "interval v");
  const Json& w = j.at("w");
  std::uint64_t radicand =
      w.is_string() ? std::stoull(w.get<std::string>()) : w.get<std::uint64_t>();
  return QuadraticInterval(c, v, radicand);
}

// Sequence: {"label": str, "values": ["num/den", ...], "support": {...}|null}.
inline Json sequence_json(const SequencePrefix& s, unsigned decimal_digits = 0) {
  Json j;
  j["label"] = s.label;
  j["values"] = rational_list_json(s.values);
  if (decimal_digits) j["values_decimal_approx"] = decimal_list_json(s.values, decimal_digits);
  j["support"] =
      s.claimed_support ? interval_json(*s.claimed_support, decimal_digits) : Json(nullptr);
  return j;
}

inline SequencePrefix sequence_from_json(const Json& j) {
  SequencePrefix s;
  if (j.contains("label") && j.at("label").is_string())
    s.label = j.at("label").get<std::string>();
  const Json& values = j.at("values");
  if (!values.is_array() || values.empty())
    throw std::invalid_argument("sequence: \"values\" must be a nonempty array");
  for (const Json& v : values) s.values.push_back(rational_from_json(v, "sequence value"));
  if (j.contains("support") && !j.at("support").is_null())
    s.claimed_support = interval_from_json(j.at("support"));
  return s;
}

// Plain reader: one value per line, blank lines skipped.
inline SequencePrefix sequence_from_plain_text(std::istream& in) {
  SequencePrefix s;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    s.values.push_back(Rational::parse(line.substr(b, e - b + 1)));
  }
  if (s.values.empty())
    throw std::invalid_argument("sequence: no values found in plain input");
  return s;
}

// Polynomial: {"num_vars": d, "terms": [{"exp": [...], "coef": "num/den"}, ...]}
// with terms in descending graded-lexicographic order.
inline Json poly_json(const MultiPoly& p, unsigned decimal_digits = 0) {
  Json j;
  j["num_vars"] = p.num_vars();
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json t;
    t["exp"] = it->first;
    t["coef"] = it->second.to_string();
    if (decimal_digits) t["coef_decimal_approx"] = it->second.to_decimal(decimal_digits);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline MultiPoly poly_from_json(const Json& j) {
  std::size_t num_vars = j.at("num_vars").get<std::size_t>();
  MultiPoly p(num_vars);
  for (const Json& t : j.at("terms")) {
    ExponentVector exp = t.at("exp").get<ExponentVector>();
    p.add_term(exp, rational_from_json(t.at("coef"), "poly coef"));
  }
  return p;
}

// Moment-criterion report:
// {"verdict","criterion","depth","witness":{"m","detail","value"}|null}.
inline Json check_report_json(const CheckReport& r, unsigned decimal_digits = 0) {
  Json j;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["criterion"] = r.criterion;
  j["depth"] = r.depth_checked;
  if (r.witness) {
    Json w;
    w["m"] = r.witness->m;
    w["detail"] = r.witness->detail;
    w["value"] = r.witness->value.to_string();
    if (decimal_digits)
      w["value_decimal_approx"] = r.witness->value.to_decimal(decimal_digits);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

// Positivity verdict:
// {"kind","point":[...]|null,"value":"num/den"|null,"resolution","samples"}.
inline Json verdict_json(const PositivityVerdict& v, unsigned decimal_digits = 0) {
  Json j;
  j["kind"] = v.counterexample ? "counterexample" : "no_counterexample";
  if (v.counterexample) {
    j["point"] = rational_list_json(v.point);
    if (decimal_digits) j["point_decimal_approx"] = decimal_list_json(v.point, decimal_digits);
    j["value"] = v.value.to_string();
    if (decimal_digits) j["value_decimal_approx"] = v.value.to_decimal(decimal_digits);
  } else {
    j["point"] = nullptr;
    j["value"] = nullptr;
  }
  j["resolution"] = v.resolution;
  j["samples"] = v.samples;
  return j;
}

inline Json compare_min_json(const CompareMinResult& r, unsigned decimal_digits = 0) {
  Json j;
  j["min_p"] = r.min_p.to_string();
  if (decimal_digits) j["min_p_decimal_approx"] = r.min_p.to_decimal(decimal_digits);
  j["min_p_point"] = rational_list_json(r.min_p_point);
  j["min_pbar"] = r.min_pbar.to_string();
  if (decimal_digits) j["min_pbar_decimal_approx"] = r.min_pbar.to_decimal(decimal_digits);
  j["min_pbar_point"] = rational_list_json(r.min_pbar_point);
  j["resolution"] = r.resolution;
  j["samples"] = r.samples;
  return j;
}

inline Json witness_report_json(const WitnessReport& w, unsigned decimal_digits = 0) {
  Json j;
  j["xi"] = w.xi.to_string();
  j["value"] = w.value.to_string();
  if (decimal_digits) j["value_decimal_approx"] = w.value.to_decimal(decimal_digits);
  j["prefix"] = sequence_json(w.prefix, decimal_digits);
  return j;
}

}  // namespace moments
