#include "opdet/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace opdet {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), whole);
    mpz_class den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    const bool negative = !int_part.empty() && int_part.front() == '-';
    if (int_part.empty() || int_part == "-" || int_part == "+") int_part = negative ? "-0" : "0";
    mpz_class whole_value = parse_integer(int_part, whole);
    if (frac_part.empty()) return Rational(whole_value);
    mpz_class frac = parse_integer(frac_part, whole);
    if (frac_part.front() == '-' || frac_part.front() == '+') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    mpz_class magnitude = mpz_class(::abs(whole_value)) * scale + frac;
    return Rational(negative ? mpz_class(-magnitude) : magnitude, scale);
  }
  return Rational(parse_integer(text, whole));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
  return Rational(inv);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational out;
  out.value_ = -a.value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational rising(const Rational& a, unsigned k) {
  Rational out(1);
  for (unsigned i = 0; i < k; ++i) out *= a + Rational(static_cast<long>(i));
  return out;
}

}  // namespace opdet
