#include "opdet/matrix.hpp"

namespace opdet {

mpz_class det_integer(std::vector<mpz_class> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("integer matrix has the wrong number of entries");
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
  mpz_class previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = at(k, k);
  }
  mpz_class result = at(n - 1, n - 1);
  return negate ? mpz_class(-result) : result;
}

Rational det_exact(const SquareMatrix<Rational>& m) {
  const std::size_t n = m.order();
  if (n == 0) return Rational(1);
  std::vector<mpz_class> ints(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).raw();
      ints[i * n + j] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  return Rational(det_integer(std::move(ints), n), scale);
}

UniPoly det_exact(const SquareMatrix<UniPoly>& m) {
  if (m.order() == 0) return UniPoly::constant(1);
  if (m.order() <= kCofactorMaxOrder) return det_expand(m);
  return det_bareiss(m);
}

MultiPoly det_exact(const SquareMatrix<MultiPoly>& m) {
  if (m.order() <= kCofactorMaxOrder) return det_expand(m);
  return det_bareiss(m);
}

}  // namespace opdet
