#include "speedrobust/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace speedrobust {

namespace mp = boost::multiprecision;

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  BigInt value{std::string(digits)};
  return text.front() == '-' ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = BigRational(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), BigInt(std::string(den_text)));
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

bool Rational::is_zero() const { return value_.is_zero(); }
bool Rational::is_integer() const { return mp::denominator(value_) == 1; }
int Rational::sign() const { return value_.sign(); }

BigInt Rational::floor() const {
  const BigInt num = mp::numerator(value_);
  const BigInt den = mp::denominator(value_);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt Rational::ceil() const {
  const BigInt num = mp::numerator(value_);
  const BigInt den = mp::denominator(value_);
  BigInt q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  if (is_integer()) return mp::numerator(value_).str();
  return mp::numerator(value_).str() + "/" + mp::denominator(value_).str();
}

std::string Rational::to_decimal(int places) const {
  BigInt scale = ipow(10, static_cast<unsigned>(places));
  const Rational magnitude = abs(*this);
  // round half away from zero
  BigInt scaled = (magnitude * Rational(scale) + Rational(1, 2)).floor();
  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (sign() < 0 && scaled != 0) digits.insert(0, "-");
  return digits;
}

Rational Rational::operator-() const { return Rational(BigRational(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt ipow(std::int64_t base, unsigned exponent) {
  return mp::pow(BigInt(base), exponent);
}

BigInt floor_scale(const BigInt& z, const Rational& rho) {
  return (Rational(z) * rho).floor();
}

std::int64_t floor_scale(std::int64_t z, const Rational& rho) {
  return to_int64(floor_scale(BigInt(z), rho));
}

std::int64_t ceil_div(std::int64_t c, std::int64_t m) {
  if (m < 1) throw std::domain_error("ceil_div requires a positive divisor");
  if (c <= 0) return -((-c) / m);
  return (c + m - 1) / m;
}

BigInt ceil_div(const BigInt& c, const BigInt& m) {
  if (m < 1) throw std::domain_error("ceil_div requires a positive divisor");
  return Rational(c, m).ceil();
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace speedrobust
