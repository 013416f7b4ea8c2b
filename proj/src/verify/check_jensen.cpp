// Jensen polynomials: Turan/Laguerre determinants, positivity, convergence to L mu.

#include <cmath>

#include "common.hpp"
#include "opdet/dets.hpp"
#include "opdet/opoly.hpp"

namespace opdet {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

JensenSeq seq_for(const MeasureSpec& spec, std::size_t count) { return JensenSeq::from_measure(spec, count); }

// det[g_{m,i+j}(y)]_{i,j<n}
Rational laplace_det(const JensenSeq& gs, std::size_t m, std::size_t n, const Rational& y) {
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(jensen(gs, m, i + j)(y));
  return vdetail::det_rows(rows);
}

}  // namespace

JensenTable jensen_convergence(const MeasureSpec& spec, const Rational& x, std::size_t m_max) {
  if (spec.kind() != MeasureKind::Laguerre && spec.kind() != MeasureKind::Explicit) {
    throw std::invalid_argument("jensen_convergence needs a Laguerre or explicit spec, got " + spec.to_string());
  }
  if (x.sign() < 0) throw std::invalid_argument("jensen_convergence needs x >= 0, got " + x.to_string());
  if (m_max == 0) throw std::invalid_argument("jensen_convergence needs m_max >= 1");

  std::size_t count = m_max + 5;
  if (auto avail = spec.available_moments()) {
    if (*avail < m_max + 1) throw InsufficientMoments(m_max, *avail);
    count = std::min(count, *avail);
  }
  const JensenSeq gs = JensenSeq::from_measure(spec, count);

  std::optional<double> alpha;
  if (spec.kind() == MeasureKind::Laguerre) alpha = spec.parameter().to_double();

  JensenTable table{spec.to_string(), x, {}};
  Rational factorials = 1;  // prod_{k<m} k! det M_k
  for (std::size_t m = 1; m <= m_max; ++m) {
    JensenRow row;
    row.m = m;
    const Rational y = x / Rational(static_cast<long>(m));
    row.value = jensen(gs, m)(y);
    if (alpha) {
      row.target = std::pow(1.0 + x.to_double(), -*alpha - 1.0);
      row.error = std::fabs(row.value.to_double() - *row.target);
    }
    if (m > 1) factorials *= factorial(static_cast<unsigned>(m - 1)) * hankel_det(spec, static_cast<long>(m) - 1);
    if (m <= 6 && !y.is_zero()) {
      try {
        row.wronskian_form = y.pow(static_cast<long>(m)) * wronskian(spec, 1, m, y.inverse()) / factorials;
      } catch (const InsufficientMoments&) {
      }
    }
    for (std::size_t n = 1; n <= 3 && m + 2 * n - 2 < gs.size(); ++n) row.laplace_dets.push_back(laplace_det(gs, m, n, y));
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace vdetail {

namespace {

void det_g(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  const unsigned m_top = plan.m_max + 1;
  for (std::size_t n = 1; n <= plan.n_max; ++n) {
    for (std::size_t m = 0; m <= m_top; ++m) {
      CaseParams params{{"n", str(n)}, {"m", str(m)}};
      log.run(params, [&]() -> Outcome {
        const JensenSeq gs = seq_for(spec, m + 2 * n - 1);
        std::vector<std::vector<UniPoly>> turan(n), shifted(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            turan[i].push_back(jensen(gs, m + i + j));
            if (id == IdentityId::DET_G) {
              const Rational scale = factorial(static_cast<unsigned>(m)) / factorial(static_cast<unsigned>(m + i + j));
              shifted[i].push_back(scale * jensen(gs, m + i + j).derivative(static_cast<unsigned>(i + j)));
            } else {
              shifted[i].push_back(jensen(gs, m, i + j));
            }
          }
        }
        const UniPoly lhs = det_poly(turan);
        const UniPoly xpow = UniPoly::monomial(static_cast<unsigned>(n * (n - 1)));
        return compare(lhs, xpow * det_poly(shifted));
      });
      if (id == IdentityId::DET_G) {
        // through q and r at 1/x; each picks up (-1)^{nm}
        log.run({{"n", str(n)}, {"m", str(m)}, {"form", "q/r at 1/x"}}, [&]() -> Outcome {
          const JensenSeq gs = seq_for(spec, m + 2 * n - 1);
          std::vector<std::vector<UniPoly>> turan(n), q(n), r(n);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              turan[i].push_back(jensen(gs, m + i + j));
              q[i].push_back(q_poly(spec, m + i + j));
              r[i].push_back(r_poly(spec, m, i + j));
            }
          }
          const UniPoly lhs = det_poly(turan);
          const Rational s = sign(static_cast<long>(n * m));
          // exponents of x^N det[q](1/x) reach down to -n(n-1)/2
          const std::size_t bound = n * m + 2 * n * (n - 1);
          for (const auto& x : eval_points(bound + 1, true)) {
            const Rational xi = x.inverse();
            const Rational via_q = s * x.pow(static_cast<long>(n * m + n * (n - 1))) * det_at(q, xi);
            if (auto bad = compare(lhs(x), via_q, {{"x", x.to_string()}, {"side", "q"}})) return bad;
            const Rational via_r = s * x.pow(static_cast<long>(n * (n - 1) + n * m)) * det_at(r, xi);
            if (auto bad = compare(lhs(x), via_r, {{"x", x.to_string()}, {"side", "r"}})) return bad;
          }
          return std::nullopt;
        });
      } else if (m >= 1) {
        // C_{n,m} det[g_{m,i+j}(x)] = (-x)^{nm} W(p_n, ..., p_{n+m-1}; 1/x)
        log.run({{"n", str(n)}, {"m", str(m)}, {"form", "Wronskian at 1/x"}}, [&]() -> Outcome {
          const JensenSeq gs = seq_for(spec, m + 2 * n - 1);
          const Rational c = ref_C(spec, n, static_cast<unsigned>(m));
          for (const auto& x : eval_points(n * m + 1, true)) {
            const Rational lhs = c * laplace_det(gs, m, n, x);
            const Rational rhs = (-x).pow(static_cast<long>(n * m)) * wronskian(spec, n, m, x.inverse());
            if (auto bad = compare(lhs, rhs, {{"x", x.to_string()}})) return bad;
          }
          return std::nullopt;
        });
      }
    }
  }
}

void turan(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (std::size_t m = 0; m <= plan.m_max + 1; ++m) {
    log.run({{"m", str(m)}}, [&] {
      const JensenSeq gs = seq_for(spec, m + 3);
      const UniPoly g0 = jensen(gs, m), g1 = jensen(gs, m + 1), g2 = jensen(gs, m + 2);
      const UniPoly lhs = g1 * g1 - g0 * g2;
      const Rational mm(static_cast<long>(m));
      const Rational scale = Rational(1) / ((mm + 2) * (mm + 1) * (mm + 1));
      const UniPoly d1 = g1.derivative();
      const UniPoly inner = (mm + 2) * (d1 * d1) - (mm + 1) * (g0 * g2.derivative(2));
      return compare(lhs, scale * UniPoly::monomial(2) * inner);
    });
  }
}

void laplace_nonneg(const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  for (std::size_t n = 1; n <= plan.n_max; ++n) {
    for (std::size_t m = 2; m <= 8; m += 2) {
      for (const auto& x : plan.node_pool) {
        if (x.sign() < 0) continue;
        log.run({{"n", str(n)}, {"m", str(m)}, {"x", x.to_string()}, {"relation", ">="}}, [&]() -> Outcome {
          const JensenSeq gs = seq_for(spec, m + 2 * n - 1);
          const Rational d = laplace_det(gs, m, n, x / Rational(static_cast<long>(m)));
          if (d.sign() >= 0) return std::nullopt;
          return Mismatch{d.to_string(), "0", {}};
        });
      }
    }
  }
}

void gl(const MeasureSpec& spec, CaseLog& log) {
  constexpr std::size_t kMMax = 64;
  const Rational x(1, 2);
  const JensenTable table = jensen_convergence(spec, x, kMMax);
  for (const auto& row : table.rows) {
    if (row.wronskian_form) {
      log.run({{"m", str(row.m)}, {"x", x.to_string()}, {"form", "Wronskian"}},
              [&] { return compare(row.value, *row.wronskian_form); });
    }
    if (row.m % 2 == 0) {
      for (std::size_t n = 0; n < row.laplace_dets.size(); ++n) {
        log.run({{"m", str(row.m)}, {"n", str(n + 1)}, {"relation", ">="}}, [&]() -> Outcome {
          if (row.laplace_dets[n].sign() >= 0) return std::nullopt;
          return Mismatch{row.laplace_dets[n].to_string(), "0", {}};
        });
      }
    }
  }
  log.run({{"trend", "error(64) < error(16)"}}, [&]() -> Outcome {
    const double late = *table.rows[kMMax - 1].error;
    const double early = *table.rows[kMMax / 4 - 1].error;
    if (late < early) return std::nullopt;
    return Mismatch{decimal(late), decimal(early), {}};
  });
}

}  // namespace

void check_jensen(IdentityId id, const MeasureSpec& spec, const SamplePlan& plan, CaseLog& log) {
  switch (id) {
    case IdentityId::DET_G:
    case IdentityId::DET_G_PHI:
      return det_g(id, spec, plan, log);
    case IdentityId::TURAN_LAGUERRE_N2:
      return turan(spec, plan, log);
    case IdentityId::LAPLACE_DET_NONNEG:
      return laplace_nonneg(spec, plan, log);
    case IdentityId::GL_CONVERGENCE:
      return gl(spec, log);
    default:
      throw std::logic_error("not a Jensen id");
  }
}

}  // namespace vdetail
}  // namespace opdet
