// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Text grammar for polynomials: a strict recursive-descent parser and the
// canonical printer. Parsing then printing then re-parsing is a fixed point.
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)? | '(' poly ')' ('^' uint)?
//   coeff  := uint ('/' uint)?
//   var    := 'x' uint | 'x' | 'y' | 'z'    (aliases only for num_vars <= 3)

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "moments/multipoly.hpp"
#include "moments/rational.hpp"

namespace moments {

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(std::size_t position, const std::string& what)
      : std::runtime_error("polynomial parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }  // 1-based

 private:
  std::size_t position_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t num_vars)
      : text_(text), num_vars_(num_vars) {}

  MultiPoly run() {
    skip_ws();
    if (eof()) fail("empty polynomial");
    MultiPoly p = parse_poly();
    skip_ws();
    if (!eof()) fail("unexpected character");
    return p;
  }

 private:
  MultiPoly parse_poly() {
    MultiPoly acc(num_vars_);
    bool negative = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      MultiPoly t = parse_term();
      acc = negative ? acc - t : acc + t;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negative = get() == '-';
        continue;
      }
      return acc;
    }
  }

  MultiPoly parse_term() {
    skip_ws();
    MultiPoly acc(num_vars_);
    if (is_digit(peek())) {
      acc = MultiPoly::constant(num_vars_, parse_coeff());
    } else {
      acc = parse_factor();
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      get();
      acc = acc * parse_factor();
    }
  }

  MultiPoly parse_factor() {
    skip_ws();
    char c = peek();
    MultiPoly base(num_vars_);
    if (c == '(') {
      get();
      base = parse_poly();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
    } else if (c == 'x' || c == 'y' || c == 'z') {
      base = parse_var();
    } else {
      fail("expected a variable or '('");
    }
    skip_ws();
    if (peek() == '^') {
      get();
      base = base.pow(parse_exponent());
    }
    return base;
  }

  MultiPoly parse_var() {
    std::size_t at = pos_;
    char c = get();
    if (c == 'x' && is_digit(peek())) {
      unsigned long long idx = parse_uint("variable index");
      if (idx == 0 || idx > num_vars_)
        fail_at(at, "variable index out of range");
      return MultiPoly::variable(num_vars_, static_cast<std::size_t>(idx - 1));
    }
    // One-letter aliases x, y, z for up to three variables.
    std::size_t idx = c == 'x' ? 0 : c == 'y' ? 1 : 2;
    if (num_vars_ > 3) fail_at(at, "aliases x, y, z require at most 3 variables");
    if (idx >= num_vars_) fail_at(at, "variable index out of range");
    return MultiPoly::variable(num_vars_, idx);
  }

  Rational parse_coeff() {
    std::size_t at = pos_;
    unsigned long long num = parse_uint("coefficient");
    if (peek() == '/') {
      get();
      if (!is_digit(peek())) fail("expected denominator digits");
      unsigned long long den = parse_uint("denominator");
      if (den == 0) fail_at(at, "zero denominator");
      return Rational(static_cast<long long>(num), static_cast<long long>(den));
    }
    return Rational(static_cast<long long>(num));
  }

  unsigned parse_exponent() {
    skip_ws();
    if (!is_digit(peek())) fail("exponent must be a nonnegative integer");
    unsigned long long e = parse_uint("exponent");
    if (e > 100000) fail("exponent too large");
    return static_cast<unsigned>(e);
  }

  unsigned long long parse_uint(const char* what) {
    skip_ws();
    if (!is_digit(peek())) fail(std::string("expected ") + what);
    unsigned long long v = 0;
    while (is_digit(peek())) {
      unsigned digit = static_cast<unsigned>(get() - '0');
      if (v > (~0ULL - digit) / 10) fail(std::string(what) + " too large");
      v = v * 10 + digit;
    }
    return v;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char get() { return eof() ? '\0' : text_[pos_++]; }
  void skip_ws() {
    // Newlines count as blanks so text read from files or pipes parses as is.
    while (!eof() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                      text_[pos_] == '\r' || text_[pos_] == '\n'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    throw PolyParseError(at + 1, what);
  }

  const std::string& text_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text, std::size_t num_vars) {
  return detail::PolyParser(text, num_vars).run();
}

// Canonical text: terms in descending graded-lex order, coefficients in
// lowest terms, explicit '*' between every pair of factors, variables always
// named x1..xd.
inline std::string print_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exp, coef] = *it;
    const bool negative = coef.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    Rational mag = coef.abs();
    bool has_vars = false;
    for (std::uint32_t e : exp) has_vars = has_vars || e != 0;
    if (!has_vars || mag != Rational(1)) {
      out += mag.to_string();
      if (has_vars) out += '*';
    }
    bool first = true;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (!first) out += '*';
      first = false;
      out += 'x';
      out += std::to_string(i + 1);
      if (exp[i] > 1) {
        out += '^';
        out += std::to_string(exp[i]);
      }
    }
  }
  return out;
}

}  // namespace moments
