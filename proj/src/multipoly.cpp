#include "opdet/multipoly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace opdet {

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw std::invalid_argument("MultiPoly arity must be positive");
}

MultiPoly::MultiPoly(std::size_t arity, Terms terms) : MultiPoly(arity) {
  for (auto& [e, c] : terms) add_term(e, c);
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::out_of_range("MultiPoly variable index out of range");
  MultiPoly p(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != arity_) throw std::invalid_argument("exponent vector length differs from arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_arity(const MultiPoly& other) const {
  if (other.arity_ != arity_) throw std::invalid_argument("MultiPoly arity mismatch");
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0U)));
  }
  return best;
}

Rational MultiPoly::coeff(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::operator()(std::span<const Rational> point) const {
  if (point.size() != arity_) {
    throw std::invalid_argument("arity mismatch: polynomial in " + std::to_string(arity_) +
                                " variables evaluated at a point of length " + std::to_string(point.size()));
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] != 0) term *= point[i].pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  require_same_arity(divisor);
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  const Rational lead_inv = lead_c.inverse();
  MultiPoly remainder = *this;
  MultiPoly quotient(arity_);
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.rbegin();
    Exponents qe(arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (re[i] < lead_e[i]) throw std::domain_error("polynomial division is not exact");
      qe[i] = re[i] - lead_e[i];
    }
    MultiPoly step(arity_);
    step.add_term(qe, rc * lead_inv);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second << ")";
    for (std::size_t i = 0; i < arity_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << (i + 1);
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  require_same_arity(other);
  MultiPoly out(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Rational poly_eval(const MultiPoly& p, std::span<const Rational> point) { return p(point); }

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace opdet
