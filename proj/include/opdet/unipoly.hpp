#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opdet/rational.hpp"

namespace opdet {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are trimmed on construction, so the zero polynomial has no
/// coefficients and equality is structural.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients)
      : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// c x^k
  static UniPoly monomial(unsigned k, const Rational& c = Rational(1));
  /// The polynomial x.
  static UniPoly x() { return monomial(1); }
  /// x - a
  static UniPoly linear_root(const Rational& a) { return UniPoly({-a, Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero past the degree).
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  /// p(q(x))
  UniPoly compose(const UniPoly& inner) const;
  /// k-th derivative.
  UniPoly derivative(unsigned k = 1) const;
  UniPoly pow(unsigned exponent) const;

  /// Quotient and remainder of Euclidean division; throws on zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Quotient of a division known to be exact; throws if a remainder is left.
  UniPoly divide_exact(const UniPoly& divisor) const;

  /// Coefficients as "p/q" strings, ascending.
  std::vector<std::string> to_strings() const;
  std::string to_string(const std::string& var = "x") const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Rational& scalar);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

Rational poly_eval(const UniPoly& p, std::span<const Rational> point);
UniPoly poly_derivative(const UniPoly& p, unsigned k);

}  // namespace opdet
