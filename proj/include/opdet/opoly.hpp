#pragma once

#include <cstddef>
#include <vector>

#include "opdet/measures.hpp"
#include "opdet/nodeset.hpp"
#include "opdet/unipoly.hpp"

namespace opdet {

/// p_n = det of M_{n-1} bordered by the row (1, x, ..., x^n); leading
/// coefficient det M_{n-1}, p_0 = 1. Throws DegenerateMeasure if det M_{n-1} = 0.
UniPoly orth_poly(const MeasureSpec& spec, std::size_t n);

/// p_n / det M_{n-1}
UniPoly monic_orth_poly(const MeasureSpec& spec, std::size_t n);

/// Square of the orthonormal leading coefficient, det M_{n-1} / det M_n.
Rational orthonormal_leading_squared(const MeasureSpec& spec, std::size_t n);

/// q_n(x) = \int (t - x)^n d mu(t)
UniPoly q_poly(const MeasureSpec& spec, std::size_t n);

/// r_{m,n}(x) = \int t^n (t - x)^m d mu(t)
UniPoly r_poly(const MeasureSpec& spec, std::size_t m, std::size_t n);

/// q_n(t_1, ..., t_m; x), i.e. q_n of the modified measure prod (t - t_i)^{m_i} d mu.
UniPoly q_nodes(const MeasureSpec& spec, const NodeSet& nodes, std::size_t n);

/// r_n(t_1, ..., t_m) = \int t^n prod (t - t_i)^{m_i} d mu(t)
Rational r_value(const MeasureSpec& spec, const NodeSet& nodes, std::size_t n);

/// Maclaurin coefficients gamma_k of psi(x) = sum gamma_k x^k / k!.
class JensenSeq {
 public:
  explicit JensenSeq(std::vector<Rational> gammas);
  /// gamma_k = (-1)^k mu_k for k < count (the Laplace transform of mu).
  static JensenSeq from_measure(const MeasureSpec& spec, std::size_t count);

  const std::vector<Rational>& gammas() const noexcept { return gammas_; }
  std::size_t size() const noexcept { return gammas_.size(); }
  /// Throws InsufficientMoments past the end.
  const Rational& at(std::size_t k) const;

 private:
  std::vector<Rational> gammas_;
};

/// g_{n,k}(x) = sum_j C(n, j) gamma_{k+j} x^j; k = 0 gives g_n.
UniPoly jensen(const JensenSeq& gs, std::size_t n, std::size_t k = 0);

struct JensenBridge {
  UniPoly g;         // g_n
  UniPoly g_from_q;  // (-x)^n q_n(1/x)
  UniPoly g_shifted;  // g_{n,k}
  UniPoly g_from_r;   // (-1)^{n+k} x^n r_{n,k}(1/x)

  bool holds() const { return g == g_from_q && g_shifted == g_from_r; }
};

JensenBridge jensen_qr_bridge(const MeasureSpec& spec, std::size_t n, std::size_t k);

/// H_n (leading 2^n), L_n^alpha (leading (-1)^n/n!), C_n^lambda (leading (lambda)_n 2^n/n!).
/// Gegenbauer with lambda = 0 is rejected.
UniPoly classical_poly(const MeasureSpec& family, std::size_t n);

/// Closed forms of q_n: i^n H_n(ix)/2^n, (-1)^n n! L_n^{(-n-alpha-1)}(-x),
/// n!/(2^n (lambda+1)_n) C_n^{-n-lambda}(x).
UniPoly classical_q_closed(const MeasureSpec& family, std::size_t n);

/// L_n^beta for any rational beta, by its terminating sum.
UniPoly laguerre_poly(const Rational& beta, std::size_t n);
/// C_n^lambda for any rational lambda.
UniPoly gegenbauer_poly(const Rational& lambda, std::size_t n);
UniPoly hermite_poly(std::size_t n);

}  // namespace opdet
