#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "opdet/rational.hpp"

namespace opdet {

/// Sparse polynomial in a fixed number of variables. Exponent vectors all have
/// length arity(); no zero coefficient is ever stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t arity);
  MultiPoly(std::size_t arity, Terms terms);

  static MultiPoly constant(std::size_t arity, const Rational& c);
  /// The coordinate function x_index.
  static MultiPoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  Rational coeff(const Exponents& exponents) const;

  Rational operator()(std::span<const Rational> point) const;
  MultiPoly pow(unsigned exponent) const;
  /// Exact quotient under lex order; throws if the division leaves a remainder.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void require_same_arity(const MultiPoly& other) const;
  void add_term(const Exponents& e, const Rational& c);

  std::size_t arity_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point);

}  // namespace opdet
