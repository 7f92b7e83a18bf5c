// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact rational scalar. Every quantity in this library lives in Q:
// arbitrary-precision integers, lowest terms, positive denominator.
// No floating point appears in any computational path.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace moments {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(int n) : value_(n) {}
    explicit Rational(const BigInt& n) : value_(n) {}

    // Normalizes sign and reduces to lowest terms; den must be nonzero.
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_ = den < 0 ? Value(-num, -den) : Value(num, den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "num" or "num/den" with an optional leading sign on num;
    // den must be a positive integer literal. No embedded whitespace.
    static Rational parse(std::string_view text) {
        std::size_t pos = 0;
        BigInt num = parse_integer(text, pos, /*allow_sign=*/true);
        if (pos == text.size()) return Rational(num);
        if (text[pos] != '/')
            throw std::invalid_argument("Rational: unexpected character in \"" + std::string(text) + "\"");
        ++pos;
        BigInt den = parse_integer(text, pos, /*allow_sign=*/false);
        if (pos != text.size())
            throw std::invalid_argument("Rational: trailing characters in \"" + std::string(text) + "\"");
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        return Rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned exponent) const {
        using boost::multiprecision::pow;
        if (exponent == 0) return Rational(1);
        return Rational(pow(numerator(), exponent), pow(denominator(), exponent));
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    // "num/den", or just "num" when the value is an integer.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // Decimal rendering with `digits` fractional digits, rounded half away
    // from zero. For human reading only; never used in computations.
    std::string to_decimal(unsigned digits) const {
        using boost::multiprecision::pow;
        BigInt n = numerator(), d = denominator();
        bool neg = n < 0;
        if (neg) n = -n;
        BigInt scale = pow(BigInt(10), digits);
        BigInt scaled = n * scale;
        BigInt q = scaled / d, r = scaled % d;
        if (2 * r >= d) ++q;
        std::string body = q.str();
        if (digits > 0) {
            if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
            body.insert(body.size() - digits, ".");
        }
        return (neg && q != 0) ? "-" + body : body;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    using Value = boost::multiprecision::cpp_rational;

    explicit Rational(Value v) : value_(std::move(v)) {}

    static BigInt parse_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
        bool negative = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::size_t digits_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits_start)
            throw std::invalid_argument("Rational: expected digits in \"" + std::string(text) + "\"");
        BigInt magnitude(std::string(text.substr(digits_start, pos - digits_start)));
        return negative ? BigInt(-magnitude) : magnitude;
    }

    Value value_;
};

}  // namespace moments
