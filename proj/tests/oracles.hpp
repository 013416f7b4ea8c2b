// Independent reference computations shared by the test suites. Nothing here
// calls into the determinant or polynomial code of the library under test
// beyond Rational arithmetic.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "opdet/rational.hpp"

namespace oracle {

using opdet::Rational;
using Grid = std::vector<std::vector<Rational>>;

// Leibniz formula, sum over all permutations.
inline Rational leibniz_det(const Grid& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Moments from their two-term recurrences rather than closed forms.
inline std::vector<Rational> hermite_moments(std::size_t count) {
  std::vector<Rational> mu(count, Rational(0));
  if (count > 0) mu[0] = 1;
  for (std::size_t k = 0; k + 2 < count; ++k) mu[k + 2] = mu[k] * Rational(static_cast<long>(k) + 1, 2);
  return mu;
}

inline std::vector<Rational> laguerre_moments(const Rational& alpha, std::size_t count) {
  std::vector<Rational> mu(count, Rational(1));
  for (std::size_t k = 0; k + 1 < count; ++k) mu[k + 1] = mu[k] * (alpha + Rational(static_cast<long>(k) + 1));
  return mu;
}

inline std::vector<Rational> gegenbauer_moments(const Rational& lambda, std::size_t count) {
  std::vector<Rational> mu(count, Rational(0));
  if (count > 0) mu[0] = 1;
  for (std::size_t k = 0; k + 2 < count; ++k) {
    const Rational kk(static_cast<long>(k));
    mu[k + 2] = mu[k] * (kk + Rational(1)) / (Rational(2) * lambda + kk + Rational(2));
  }
  return mu;
}

// Value of sum_k c_k x^k with coefficients listed ascending.
inline Rational eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0), power(1);
  for (const auto& c : coeffs) {
    acc += c * power;
    power *= x;
  }
  return acc;
}

// Orthogonal polynomial value via the bordered moment determinant at a point.
inline Rational bordered_p(const std::vector<Rational>& mu, std::size_t n, const Rational& x) {
  Grid a(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) a[i][j] = mu[i + j];
  for (std::size_t j = 0; j <= n; ++j) a[n][j] = x.pow(static_cast<long>(j));
  return leibniz_det(a);
}

// Seeded generator of small rationals.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  Rational next(long max_num = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }

  std::vector<Rational> vec(std::size_t n) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(next());
    return out;
  }

  std::vector<Rational> distinct(std::size_t n) {
    std::vector<Rational> out;
    while (out.size() < n) {
      Rational r = next();
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
  }

  std::size_t below(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
