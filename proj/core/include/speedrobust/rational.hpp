#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Rational is a thin value type over a GMP-backed fraction. It is always
// kept in canonical form: denominator positive, gcd(|num|, den) == 1, zero
// represented as 0/1. Two Rationals are equal iff their canonical fields are.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace speedrobust {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(std::int64_t numerator, std::int64_t denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  // Parses "p/q" or a plain integer (optionally signed). Decimal points and
  // exponents are rejected so that command-line values stay exact.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_zero() const;
  bool is_integer() const;
  int sign() const;

  // Greatest integer <= value / least integer >= value.
  BigInt floor() const;
  BigInt ceil() const;

  // Lossy; only for display and CSV decimal columns.
  double to_double() const;

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  // Fixed-point decimal with `places` digits, rounded half away from zero.
  std::string to_decimal(int places) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  explicit Rational(BigRational value) : value_(std::move(value)) {}

  BigRational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational abs(const Rational& value);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Integer power with exact big-integer result.
BigInt ipow(std::int64_t base, unsigned exponent);

// floor(z * rho), computed as (z * num) div den without rounding.
BigInt floor_scale(const BigInt& z, const Rational& rho);
std::int64_t floor_scale(std::int64_t z, const Rational& rho);

// ceil(c / m) for c >= 0, m >= 1.
std::int64_t ceil_div(std::int64_t c, std::int64_t m);
BigInt ceil_div(const BigInt& c, const BigInt& m);

// Narrowing conversion; throws std::overflow_error if out of range.
std::int64_t to_int64(const BigInt& value);

}  // namespace speedrobust
