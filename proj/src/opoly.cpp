#include "opdet/opoly.hpp"

#include <stdexcept>

#include "opdet/errors.hpp"
#include "opdet/matrix.hpp"

namespace opdet {

namespace {

// (-x)^j as a polynomial
UniPoly neg_x_pow(std::size_t j) {
  return UniPoly::monomial(static_cast<unsigned>(j), (j % 2) ? Rational(-1) : Rational(1));
}

void require_moments(const MeasureSpec& spec, std::size_t highest) {
  if (auto available = spec.available_moments(); available && highest >= *available) {
    throw InsufficientMoments(highest, *available);
  }
}

}  // namespace

UniPoly orth_poly(const MeasureSpec& spec, std::size_t n) {
  if (n == 0) return UniPoly::constant(1);
  const auto& memo = memo_of(spec);
  if (auto cached = memo.find_orth(n)) return *cached;
  require_moments(spec, 2 * n - 1);
  if (hankel_det(spec, static_cast<long>(n) - 1).is_zero()) {
    throw DegenerateMeasure("det M_" + std::to_string(n - 1) + " vanishes for " + spec.to_string() +
                            "; p_" + std::to_string(n) + " is undefined");
  }
  std::vector<Rational> mu(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) mu[k] = moment(spec, k);

  // expand along the symbolic last row
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    auto minor = SquareMatrix<Rational>::generate(n, [&](std::size_t r, std::size_t c) {
      return mu[r + (c < j ? c : c + 1)];
    });
    Rational cofactor = det_exact(minor);
    coeffs[j] = ((n + j) % 2) ? -cofactor : cofactor;
  }
  UniPoly p(std::move(coeffs));
  memo.store_orth(n, p);
  return p;
}

UniPoly monic_orth_poly(const MeasureSpec& spec, std::size_t n) {
  return orth_poly(spec, n) * hankel_det(spec, static_cast<long>(n) - 1).inverse();
}

Rational orthonormal_leading_squared(const MeasureSpec& spec, std::size_t n) {
  const Rational denominator = hankel_det(spec, static_cast<long>(n));
  if (denominator.is_zero()) throw DegenerateMeasure("det M_" + std::to_string(n) + " vanishes");
  return hankel_det(spec, static_cast<long>(n) - 1) / denominator;
}

UniPoly q_poly(const MeasureSpec& spec, std::size_t n) {
  require_moments(spec, n);
  UniPoly q;
  for (std::size_t k = 0; k <= n; ++k) {
    q += neg_x_pow(n - k) * (moment(spec, k) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
  }
  return q;
}

UniPoly r_poly(const MeasureSpec& spec, std::size_t m, std::size_t n) {
  require_moments(spec, n + m);
  UniPoly r;
  for (std::size_t k = 0; k <= m; ++k) {
    r += neg_x_pow(m - k) * (moment(spec, n + k) * binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
  }
  return r;
}

UniPoly q_nodes(const MeasureSpec& spec, const NodeSet& nodes, std::size_t n) {
  if (nodes.empty()) return q_poly(spec, n);
  return q_poly(MeasureSpec::modified(spec, nodes), n);
}

Rational r_value(const MeasureSpec& spec, const NodeSet& nodes, std::size_t n) {
  if (nodes.empty()) return moment(spec, n);
  const auto modified = MeasureSpec::modified(spec, nodes);
  require_moments(modified, n);
  return moment(modified, n);
}

JensenSeq::JensenSeq(std::vector<Rational> gammas) : gammas_(std::move(gammas)) {
  if (gammas_.empty()) throw std::invalid_argument("a Jensen sequence needs at least one coefficient");
}

JensenSeq JensenSeq::from_measure(const MeasureSpec& spec, std::size_t count) {
  if (count == 0) throw std::invalid_argument("a Jensen sequence needs at least one coefficient");
  require_moments(spec, count - 1);
  std::vector<Rational> gammas(count);
  for (std::size_t k = 0; k < count; ++k) {
    gammas[k] = (k % 2) ? -moment(spec, k) : moment(spec, k);
  }
  return JensenSeq(std::move(gammas));
}

const Rational& JensenSeq::at(std::size_t k) const {
  if (k >= gammas_.size()) throw InsufficientMoments(k, gammas_.size());
  return gammas_[k];
}

UniPoly jensen(const JensenSeq& gs, std::size_t n, std::size_t k) {
  gs.at(n + k);
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    coeffs[j] = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * gs.at(k + j);
  }
  return UniPoly(std::move(coeffs));
}

namespace {

// x^n p(1/x) for deg p <= n
UniPoly reverse(const UniPoly& p, std::size_t n) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs[n - i] = p.coeff(i);
  return UniPoly(std::move(coeffs));
}

}  // namespace

JensenBridge jensen_qr_bridge(const MeasureSpec& spec, std::size_t n, std::size_t k) {
  const auto gs = JensenSeq::from_measure(spec, n + k + 1);
  JensenBridge bridge;
  bridge.g = jensen(gs, n, 0);
  bridge.g_from_q = reverse(q_poly(spec, n), n) * Rational((n % 2) ? -1 : 1);
  bridge.g_shifted = jensen(gs, n, k);
  bridge.g_from_r = reverse(r_poly(spec, n, k), n) * Rational(((n + k) % 2) ? -1 : 1);
  return bridge;
}

UniPoly hermite_poly(std::size_t n) {
  // H_n = sum_k (-1)^k n!/(k!(n-2k)!) (2x)^{n-2k}
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const auto d = static_cast<unsigned>(n - 2 * k);
    Rational c = factorial(static_cast<unsigned>(n)) / (factorial(static_cast<unsigned>(k)) * factorial(d)) *
                 Rational(2).pow(d);
    coeffs[d] = (k % 2) ? -c : c;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly laguerre_poly(const Rational& beta, std::size_t n) {
  // coefficient of x^j: (-1)^j (beta+j+1)_{n-j} / ((n-j)! j!)
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const auto rest = static_cast<unsigned>(n - j);
    Rational c = rising(beta + Rational(static_cast<long>(j) + 1), rest) /
                 (factorial(rest) * factorial(static_cast<unsigned>(j)));
    coeffs[j] = (j % 2) ? -c : c;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly gegenbauer_poly(const Rational& lambda, std::size_t n) {
  // C_n^lambda = sum_k (-1)^k (lambda)_{n-k} / (k! (n-2k)!) (2x)^{n-2k}
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const auto d = static_cast<unsigned>(n - 2 * k);
    Rational c = rising(lambda, static_cast<unsigned>(n - k)) /
                 (factorial(static_cast<unsigned>(k)) * factorial(d)) * Rational(2).pow(d);
    coeffs[d] = (k % 2) ? -c : c;
  }
  return UniPoly(std::move(coeffs));
}

UniPoly classical_poly(const MeasureSpec& family, std::size_t n) {
  switch (family.kind()) {
    case MeasureKind::Hermite:
      return hermite_poly(n);
    case MeasureKind::Laguerre:
      return laguerre_poly(family.parameter(), n);
    case MeasureKind::Gegenbauer:
      if (family.parameter().is_zero()) {
        throw std::invalid_argument("classical_poly: Gegenbauer lambda = 0 has no closed form normalization");
      }
      return gegenbauer_poly(family.parameter(), n);
    default:
      throw std::invalid_argument("classical_poly needs a classical family, got " + family.to_string());
  }
}

UniPoly classical_q_closed(const MeasureSpec& family, std::size_t n) {
  const auto nn = static_cast<unsigned>(n);
  switch (family.kind()) {
    case MeasureKind::Hermite: {
      // c_k i^{n+k} / 2^n; only n+k even survives, where i^{n+k} = (-1)^{(n+k)/2}
      const UniPoly h = hermite_poly(n);
      std::vector<Rational> coeffs(n + 1);
      const Rational scale = Rational(2).pow(-static_cast<long>(n));
      for (std::size_t k = 0; k <= n; ++k) {
        if ((n + k) % 2) continue;
        coeffs[k] = h.coeff(k) * scale * Rational(((n + k) / 2) % 2 ? -1 : 1);
      }
      return UniPoly(std::move(coeffs));
    }
    case MeasureKind::Laguerre: {
      const Rational beta = -Rational(static_cast<long>(n)) - family.parameter() - Rational(1);
      const UniPoly l = laguerre_poly(beta, n).compose(UniPoly({Rational(0), Rational(-1)}));
      return l * (factorial(nn) * Rational((n % 2) ? -1 : 1));
    }
    case MeasureKind::Gegenbauer: {
      const Rational& lambda = family.parameter();
      const Rational beta = -Rational(static_cast<long>(n)) - lambda;
      return gegenbauer_poly(beta, n) *
             (factorial(nn) / (Rational(2).pow(static_cast<long>(n)) * rising(lambda + Rational(1), nn)));
    }
    default:
      throw std::invalid_argument("classical_q_closed needs a classical family, got " + family.to_string());
  }
}

}  // namespace opdet
