#include "shapegeo/rational.h"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace shapegeo {
namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform required");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  } else {
    std::string_view den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() ||
        den_text[0] == '-' || den_text[0] == '+' || !parse_integer(den_text, den)) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace shapegeo
