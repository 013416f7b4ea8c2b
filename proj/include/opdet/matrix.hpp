#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opdet/multipoly.hpp"
#include "opdet/rational.hpp"
#include "opdet/unipoly.hpp"

namespace opdet {

/// Square grid of exact ring elements, stored row-major.
template <class E>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t order, std::vector<E> row_major) : order_(order), entries_(std::move(row_major)) {
    if (entries_.size() != order_ * order_) {
      throw std::invalid_argument("matrix of order " + std::to_string(order_) + " needs " +
                                  std::to_string(order_ * order_) + " entries, got " +
                                  std::to_string(entries_.size()));
    }
  }

  /// Throws on ragged or non-square input.
  static SquareMatrix from_rows(const std::vector<std::vector<E>>& rows) {
    std::vector<E> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      if (row.size() != rows.size()) {
        throw std::invalid_argument("non-square matrix: " + std::to_string(rows.size()) + " rows, a row of length " +
                                    std::to_string(row.size()));
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return SquareMatrix(rows.size(), std::move(flat));
  }

  template <class F>
  static SquareMatrix generate(std::size_t order, F&& entry) {
    std::vector<E> flat;
    flat.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) flat.push_back(entry(i, j));
    return SquareMatrix(order, std::move(flat));
  }

  std::size_t order() const noexcept { return order_; }
  const E& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  E& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const std::vector<E>& entries() const noexcept { return entries_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<E> entries_;
};

namespace ring {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational divide_exact(const Rational& a, const Rational& b) { return a / b; }

inline UniPoly zero_like(const UniPoly&) { return UniPoly(); }
inline UniPoly one_like(const UniPoly&) { return UniPoly::constant(1); }
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline UniPoly divide_exact(const UniPoly& a, const UniPoly& b) { return a.divide_exact(b); }

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.arity()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.arity(), 1); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) { return a.divide_exact(b); }

}  // namespace ring

/// Determinant by Laplace expansion with memoized minors (2^n n products).
template <class E>
E det_expand(const SquareMatrix<E>& m) {
  const std::size_t n = m.order();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix needs a ring identity");
  if (n > 20) throw std::invalid_argument("matrix too large for cofactor expansion");
  const E zero = ring::zero_like(m(0, 0));
  std::vector<E> partial(std::size_t{1} << n, zero);
  partial[0] = ring::one_like(m(0, 0));
  for (std::size_t mask = 0; mask + 1 < partial.size(); ++mask) {
    if (ring::is_zero(partial[mask])) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const E& a = m(row, col);
      if (ring::is_zero(a)) continue;
      // columns already used to the right of col each contribute one inversion
      const int inversions = __builtin_popcountll(mask >> (col + 1));
      E term = partial[mask] * a;
      if (inversions % 2 == 0) {
        partial[mask | (std::size_t{1} << col)] += term;
      } else {
        partial[mask | (std::size_t{1} << col)] -= term;
      }
    }
  }
  return partial.back();
}

/// Fraction-free Bareiss elimination over an integral domain with exact division.
template <class E>
E det_bareiss(SquareMatrix<E> m) {
  const std::size_t n = m.order();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix needs a ring identity");
  E previous = ring::one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring::is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && ring::is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return ring::zero_like(m(0, 0));
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        E numerator = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = ring::divide_exact(numerator, previous);
      }
    }
    previous = m(k, k);
  }
  E result = m(n - 1, n - 1);
  return negate ? -result : result;
}

/// Exact determinant. Rational entries: denominators cleared row by row, then
/// Bareiss over the integers. Polynomial entries: cofactor expansion up to
/// order 6, Bareiss with exact polynomial division above. Order 0 gives 1.
Rational det_exact(const SquareMatrix<Rational>& m);
UniPoly det_exact(const SquareMatrix<UniPoly>& m);
/// Order 0 is rejected: the arity of the identity is unknown.
MultiPoly det_exact(const SquareMatrix<MultiPoly>& m);

/// Fraction-free integer determinant (Bareiss).
mpz_class det_integer(std::vector<mpz_class> row_major, std::size_t order);

inline constexpr std::size_t kCofactorMaxOrder = 6;

}  // namespace opdet
