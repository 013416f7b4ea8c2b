// Hermite / Laguerre / Gegenbauer displays, left sides built from the classical
// polynomials themselves.

#include <functional>

#include "common.hpp"
#include "opdet/opoly.hpp"
#include "opdet/symmetric.hpp"

namespace opdet::vdetail {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

Rational prod_factorials(unsigned from, unsigned to) {
  Rational out = 1;
  for (unsigned k = from; k <= to; ++k) out *= factorial(k);
  return out;
}

// det[P^{(i)}_{n+j}(x)]_{i,j<m} for the family's own normalization
Rational classical_wronskian(const MeasureSpec& spec, std::size_t n, std::size_t m, const Rational& x) {
  std::vector<std::vector<Rational>> rows(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rows[i].push_back(classical_poly(spec, n + j).derivative(i)(x));
  return det_rows(rows);
}

// H_k(ix) = i^k R_k(x) with R_k real
UniPoly hermite_real(std::size_t k) {
  const UniPoly h = hermite_poly(k);
  std::vector<Rational> c(k + 1);
  for (std::size_t j = 0; j <= k; ++j)
    if ((k - j) % 2 == 0) c[j] = sign(static_cast<long>((k - j) / 2)) * h.coeff(j);
  return UniPoly(std::move(c));
}

// (x^2-1)^{k/2} C_k^{mu}(-x/sqrt(x^2-1)), a polynomial by parity
UniPoly gegenbauer_homogenized(const Rational& mu, std::size_t k) {
  const UniPoly c = gegenbauer_poly(mu, k);
  const UniPoly x2m1{-1, 0, 1};
  UniPoly out;
  for (std::size_t j = 0; j <= k; ++j) {
    if ((k - j) % 2 != 0 || c.coeff(j).is_zero()) continue;
    out += c.coeff(j) * sign(static_cast<long>(j)) * UniPoly::monomial(static_cast<unsigned>(j)) *
           x2m1.pow(static_cast<unsigned>((k - j) / 2));
  }
  return out;
}

Outcome on_points(std::size_t bound, const std::function<std::pair<Rational, Rational>(const Rational&)>& both) {
  for (const auto& x : eval_points(bound + 1)) {
    const auto [lhs, rhs] = both(x);
    if (auto bad = compare(lhs, rhs, {{"x", x.to_string()}})) return bad;
  }
  return std::nullopt;
}

// det[P_{n+j-1}(t_i)/lead]/V = (-1)^{nm} det M_{n-1}(w(t)) / det M_{n-1}, and the shifted-moment version
void ratio_display(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  Sampler sampler(salted(plan.seed, id));
  for (std::size_t n = 1; n <= plan.n_max; ++n) {
    for (unsigned m = 1; m <= plan.m_max; ++m) {
      for (const auto& t : sampler.tuples(plan.node_pool, m, plan.tuples_per_shape)) {
        log.run({{"n", str(n)}, {"m", str(m)}, {"nodes", join(t)}}, [&]() -> Outcome {
          std::vector<std::vector<Rational>> rows(m);
          for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
              const UniPoly p = classical_poly(spec, n + j);
              rows[i].push_back(p(t[i]) / p.leading());
            }
          }
          const Rational lhs = det_rows(rows) / vandermonde(t);
          const NodeSet all = NodeSet::simple(t);
          std::vector<std::vector<Rational>> r(n), q(n);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              r[i].push_back(r_value(spec, all, i + j));
              q[i].push_back(q_nodes(spec, all.prefix(m - 1), i + j + 1)(t.back()));
            }
          }
          const Rational scale = sign(static_cast<long>(n * m)) / hankel_det(spec, static_cast<long>(n) - 1);
          if (auto bad = compare(lhs, scale * det_rows(r), {{"form", "moment matrix"}})) return bad;
          return compare(lhs, scale * det_rows(q), {{"form", "shifted moments"}});
        });
      }
    }
  }
}

void q_closed(const MeasureSpec& spec, CaseLog& log) {
  for (std::size_t n = 0; n <= 6; ++n) {
    log.run({{"n", str(n)}, {"form", "q closed"}}, [&]() -> Outcome {
      const UniPoly q = q_poly(spec, n);
      const UniPoly minus_x{0, -1};
      switch (spec.kind()) {
        case MeasureKind::Hermite:
          return compare(q, sign(static_cast<long>(n)) * Rational(1, 2).pow(static_cast<long>(n)) * hermite_real(n));
        case MeasureKind::Laguerre: {
          const Rational beta = -Rational(static_cast<long>(n)) - spec.parameter() - 1;
          return compare(q, sign(static_cast<long>(n)) * factorial(static_cast<unsigned>(n)) *
                                laguerre_poly(beta, n).compose(minus_x));
        }
        default: {
          const Rational& lambda = spec.parameter();
          const Rational first_scale = factorial(static_cast<unsigned>(n)) /
                                       (Rational(2).pow(static_cast<long>(n)) * rising(lambda + 1, static_cast<unsigned>(n)));
          const UniPoly first = first_scale * gegenbauer_poly(-Rational(static_cast<long>(n)) - lambda, n);
          if (auto bad = compare(q, first, {{"expression", "first"}})) return bad;
          const Rational mu = lambda + Rational(1, 2);
          const UniPoly second = gegenbauer_homogenized(mu, n) * gegenbauer_poly(mu, n)(1).inverse();
          return compare(q, second, {{"expression", "second"}});
        }
      }
    });
  }
}

void hermite_wronskian(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (std::size_t n = 1; n <= plan.n_max; ++n) {
    for (std::size_t m = 1; m <= plan.m_max; ++m) {
      log.run({{"n", str(n)}, {"m", str(m)}}, [&]() -> Outcome {
        const Rational ratio = prod_factorials(1, static_cast<unsigned>(m - 1)) /
                               prod_factorials(1, static_cast<unsigned>(n - 1));
        const Rational s = sign(static_cast<long>(m * n));
        std::vector<std::vector<UniPoly>> r(n), h(n);
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t j = 0; j < n; ++j) {
            r[k].push_back(r_poly(spec, m, k + j));
            h[k].push_back(hermite_real(m + k + j));
          }
        }
        const Rational r_const = s * Rational(2).pow(static_cast<long>((m + n) * (m + n - 1) / 2)) * ratio;
        // i^{n(n+m-1)} in the constant times i^{nm + n(n-1)} pulled out of det[H(ix)]
        const long phase = static_cast<long>(n * (n + m - 1) + n * m + n * (n - 1));
        const Rational h_const = s * Rational(2).pow(static_cast<long>(m * (m - 1) / 2)) /
                                 Rational(2).pow(static_cast<long>(n * (n - 1) / 2)) * ratio * sign(phase / 2);
        const std::size_t bound = std::max({n * m, row_degree_bound(r), row_degree_bound(h)});
        return on_points(bound, [&](const Rational& x) {
          const Rational lhs = classical_wronskian(spec, n, m, x);
          const Rational via_r = r_const * det_at(r, x);
          if (lhs != via_r) return std::pair{lhs, via_r};
          return std::pair{lhs, h_const * det_at(h, x)};
        });
      });
    }
  }
}

void laguerre_wronskian(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  const Rational& alpha = spec.parameter();
  const UniPoly minus_x{0, -1};
  for (std::size_t n = 1; n <= plan.n_max; ++n) {
    for (std::size_t m = 1; m <= plan.m_max; ++m) {
      log.run({{"n", str(n)}, {"m", str(m)}, {"form", "Wronskian"}}, [&]() -> Outcome {
        Rational c = sign(static_cast<long>(m * (m - 1) / 2)) * prod_factorials(1, static_cast<unsigned>(m - 1));
        for (std::size_t j = 1; j <= m; ++j) c /= factorial(static_cast<unsigned>(n + j - 1));
        c /= hankel_det(spec, static_cast<long>(n) - 1);
        std::vector<std::vector<UniPoly>> r(n), mid(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = m + i + j;
            r[i].push_back(r_poly(spec, m, i + j));
            const Rational beta = -Rational(static_cast<long>(k)) - alpha - 1;
            mid[i].push_back(factorial(static_cast<unsigned>(k)) * laguerre_poly(beta, k).compose(minus_x));
          }
        }
        // the middle display needs an extra (-1)^{nm}
        const Rational mid_const = c * sign(static_cast<long>(n * m));
        const std::size_t bound = std::max({n * m, row_degree_bound(r), row_degree_bound(mid)});
        return on_points(bound, [&](const Rational& x) {
          const Rational lhs = classical_wronskian(spec, n, m, x);
          const Rational via_r = c * det_at(r, x);
          if (lhs != via_r) return std::pair{lhs, via_r};
          return std::pair{lhs, mid_const * det_at(mid, x)};
        });
      });
    }
  }
}

void gegenbauer_wronskian(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  const Rational& lambda = spec.parameter();
  const Rational mu = lambda + Rational(1, 2);
  for (std::size_t n = 1; n <= plan.n_max; ++n) {
    for (std::size_t m = 1; m <= plan.m_max; ++m) {
      log.run({{"n", str(n)}, {"m", str(m)}, {"form", "Wronskian"}}, [&]() -> Outcome {
        Rational c = sign(static_cast<long>(m * n)) * prod_factorials(1, static_cast<unsigned>(m - 1));
        for (std::size_t j = 1; j <= m; ++j) c *= classical_poly(spec, n + j - 1).leading();
        c /= hankel_det(spec, static_cast<long>(n) - 1);
        std::vector<std::vector<UniPoly>> r(n), mid(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = m + i + j;
            r[i].push_back(r_poly(spec, m, i + j));
            // the (x^2-1) power is carried inside each entry
            mid[i].push_back(gegenbauer_homogenized(mu, k) * gegenbauer_poly(mu, k)(1).inverse());
          }
        }
        const std::size_t bound = std::max({n * m, row_degree_bound(r), row_degree_bound(mid)});
        return on_points(bound, [&](const Rational& x) {
          const Rational lhs = classical_wronskian(spec, n, m, x);
          const Rational via_r = c * det_at(r, x);
          if (lhs != via_r) return std::pair{lhs, via_r};
          return std::pair{lhs, c * det_at(mid, x)};
        });
      });
    }
  }
}

}  // namespace

void check_classical(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  switch (id) {
    case IdentityId::HERMITE_MAIN:
      ratio_display(id, spec, plan, log);
      return q_closed(spec, log);
    case IdentityId::HERMITE_WRONSKIAN:
      return hermite_wronskian(spec, plan, log);
    case IdentityId::LAGUERRE_MAIN:
      ratio_display(id, spec, plan, log);
      laguerre_wronskian(spec, plan, log);
      return q_closed(spec, log);
    case IdentityId::GEGEN_MAIN:
      ratio_display(id, spec, plan, log);
      gegenbauer_wronskian(spec, plan, log);
      return q_closed(spec, log);
    default:
      throw std::logic_error("not a classical id");
  }
}

}  // namespace opdet::vdetail
