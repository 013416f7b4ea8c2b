#include <gtest/gtest.h>

#include "opdet/errors.hpp"
#include "opdet/matrix.hpp"
#include "opdet/opoly.hpp"
#include "oracles.hpp"

using namespace opdet;

namespace {

std::vector<MeasureSpec> classical_specs() {
  return {MeasureSpec::hermite(), MeasureSpec::laguerre(Rational(0)), MeasureSpec::laguerre(Rational(3, 2)),
          MeasureSpec::gegenbauer(Rational(1, 2)), MeasureSpec::gegenbauer(Rational(3, 2))};
}

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts{Rational(0),     Rational(1),     Rational(-1),   Rational(1, 2),
                                         Rational(-1, 3), Rational(2),     Rational(5, 2), Rational(-3),
                                         Rational(7, 4),  Rational(-5, 6)};
  return pts;
}

// integral of p against the measure, by contracting coefficients with moments
Rational integrate(const MeasureSpec& spec, const UniPoly& p) {
  Rational sum(0);
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) sum += p.coeff(k) * moment(spec, k);
  return sum;
}

}  // namespace

TEST(OrthPoly, Examples) {
  const auto h = MeasureSpec::hermite();
  EXPECT_EQ(orth_poly(h, 1), UniPoly::x());
  EXPECT_EQ(orth_poly(h, 2), UniPoly({Rational(-1, 4), Rational(0), Rational(1, 2)}));
  EXPECT_EQ(orth_poly(MeasureSpec::laguerre(Rational(1)), 0), UniPoly::constant(1));
}

TEST(OrthPoly, MatchesBorderedLeibnizOracle) {
  const auto mu = oracle::laguerre_moments(Rational(3, 2), 10);
  const auto spec = MeasureSpec::laguerre(Rational(3, 2));
  for (std::size_t n = 0; n <= 4; ++n) {
    const UniPoly p = orth_poly(spec, n);
    for (const auto& x : sample_points()) EXPECT_EQ(p(x), oracle::bordered_p(mu, n, x));
  }
}

TEST(OrthPoly, OrthogonalityAndNormalization) {
  for (const auto& spec : classical_specs()) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const UniPoly p = orth_poly(spec, n);
      EXPECT_EQ(p.leading(), hankel_det(spec, static_cast<long>(n) - 1));
      for (unsigned j = 0; j < n; ++j) EXPECT_TRUE(integrate(spec, p * UniPoly::monomial(j)).is_zero());
      EXPECT_EQ(integrate(spec, p * UniPoly::monomial(static_cast<unsigned>(n))), hankel_det(spec, static_cast<long>(n)));
      EXPECT_EQ(monic_orth_poly(spec, n).leading(), Rational(1));
      // p_n^2 integrates to det M_{n-1} det M_n
      EXPECT_EQ(integrate(spec, p * p) * orthonormal_leading_squared(spec, n),
                p.leading() * p.leading());
    }
  }
}

TEST(OrthPoly, DegenerateAndShortMeasures) {
  const auto degenerate = MeasureSpec::explicit_moments({Rational(1), Rational(1), Rational(1), Rational(1)});
  EXPECT_EQ(orth_poly(degenerate, 1), UniPoly({Rational(-1), Rational(1)}));
  EXPECT_THROW(orth_poly(degenerate, 2), DegenerateMeasure);
  EXPECT_THROW(orth_poly(MeasureSpec::explicit_moments({Rational(1), Rational(0)}), 2), InsufficientMoments);
}

TEST(OrthPoly, ExplicitHermiteListAgrees) {
  const auto expl = MeasureSpec::explicit_moments(oracle::hermite_moments(10));
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(orth_poly(expl, n), orth_poly(MeasureSpec::hermite(), n));
}

TEST(QPoly, Examples) {
  const auto h = MeasureSpec::hermite();
  EXPECT_EQ(q_poly(h, 1), UniPoly({Rational(0), Rational(-1)}));
  EXPECT_EQ(q_poly(h, 2), UniPoly({Rational(1, 2), Rational(0), Rational(1)}));
  EXPECT_EQ(q_poly(MeasureSpec::laguerre(Rational(2)), 0), UniPoly::constant(1));
  for (std::size_t n = 0; n <= 5; ++n) {
    const UniPoly q = q_poly(MeasureSpec::laguerre(Rational(1, 2)), n);
    EXPECT_EQ(q.degree(), static_cast<int>(n));
    EXPECT_EQ(q.leading(), Rational(n % 2 ? -1 : 1));
  }
}

TEST(RPoly, Examples) {
  const auto h = MeasureSpec::hermite();
  EXPECT_EQ(r_poly(h, 1, 0), UniPoly({Rational(0), Rational(-1)}));
  EXPECT_EQ(r_poly(h, 2, 0), UniPoly({Rational(1, 2), Rational(0), Rational(1)}));
  EXPECT_EQ(r_poly(h, 2, 2), UniPoly({Rational(3, 4), Rational(0), Rational(1, 2)}));
  EXPECT_THROW(r_poly(MeasureSpec::explicit_moments({Rational(1), Rational(0)}), 1, 1), InsufficientMoments);
}

TEST(QNodes, Examples) {
  const auto h = MeasureSpec::hermite();
  EXPECT_EQ(q_nodes(h, NodeSet{{Rational(0), 1}}, 1), UniPoly::constant(Rational(1, 2)));
  EXPECT_EQ(q_nodes(h, NodeSet{{Rational(1), 1}}, 1), UniPoly({Rational(1, 2), Rational(1)}));
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(q_nodes(h, NodeSet{}, n), q_poly(h, n));
}

TEST(QNodes, RecurrenceInLastNode) {
  oracle::RationalGen gen(17);
  for (const auto& spec : classical_specs()) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t n = 0; n + m <= 6; ++n) {
        const auto t = gen.distinct(m);
        const NodeSet all = NodeSet::simple(t);
        const NodeSet head = all.prefix(m - 1);
        const UniPoly lhs = q_nodes(spec, all, n);
        const UniPoly rhs = q_nodes(spec, head, n + 1) + UniPoly::linear_root(t.back()) * q_nodes(spec, head, n);
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(QNodes, CollapseWhenAllNodesEqualX) {
  for (const auto& spec : classical_specs()) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (std::size_t n = 0; n + m <= 6; ++n) {
        const UniPoly target = q_poly(spec, n + m);
        for (const auto& x : sample_points()) {
          EXPECT_EQ(q_nodes(spec, NodeSet{{x, m}}, n)(x), target(x));
        }
      }
    }
  }
}

TEST(RValue, Examples) {
  const auto h = MeasureSpec::hermite();
  EXPECT_EQ(r_value(h, NodeSet{{Rational(0), 1}, {Rational(1), 1}, {Rational(2), 1}}, 0), Rational(-3, 2));
  EXPECT_EQ(r_value(h, NodeSet{{Rational(0), 2}}, 0), Rational(1, 2));
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(r_value(h, NodeSet{}, n), moment(h, n));
}

TEST(RValue, AtRepeatedNodeIsRPoly) {
  for (const auto& spec : classical_specs()) {
    for (unsigned m = 1; m <= 3; ++m)
      for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& x : sample_points()) EXPECT_EQ(r_value(spec, NodeSet{{x, m}}, n), r_poly(spec, m, n)(x));
  }
}

TEST(QPoly, ParityForSymmetricMeasures) {
  for (const auto& spec : {MeasureSpec::hermite(), MeasureSpec::gegenbauer(Rational(3, 2))}) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const UniPoly q = q_poly(spec, n);
      const UniPoly reflected = q.compose(UniPoly({Rational(0), Rational(-1)}));
      EXPECT_EQ(reflected, q * Rational(n % 2 ? -1 : 1));
    }
  }
}

TEST(PnDetQ, HankelOfQGivesOrthogonalPolynomial) {
  auto specs = classical_specs();
  specs.push_back(MeasureSpec::explicit_moments(oracle::hermite_moments(10)));
  for (const auto& spec : specs) {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<UniPoly> q;
      for (std::size_t k = 1; k <= 2 * n - 1; ++k) q.push_back(q_poly(spec, k));
      auto m = SquareMatrix<UniPoly>::generate(n, [&](std::size_t i, std::size_t j) { return q[i + j]; });
      EXPECT_EQ(det_exact(m) * Rational(n % 2 ? -1 : 1), orth_poly(spec, n)) << spec.to_string() << " n=" << n;
    }
  }
}

TEST(Jensen, Examples) {
  const auto gs = JensenSeq::from_measure(MeasureSpec::hermite(), 6);
  EXPECT_EQ(gs.gammas()[2], Rational(1, 2));
  EXPECT_EQ(jensen(gs, 2, 0), UniPoly({Rational(1), Rational(0), Rational(1, 2)}));
  EXPECT_EQ(jensen(gs, 0, 3), UniPoly::constant(gs.gammas()[3]));
  EXPECT_EQ(jensen(gs, 1, 1), UniPoly({Rational(0), Rational(1, 2)}));
  EXPECT_THROW(jensen(gs, 4, 2), InsufficientMoments);
  EXPECT_THROW(JensenSeq({}), std::invalid_argument);
}

TEST(Jensen, LaplaceSigns) {
  const auto gs = JensenSeq::from_measure(MeasureSpec::laguerre(Rational(0)), 5);
  EXPECT_EQ(gs.gammas(), (std::vector<Rational>{Rational(1), Rational(-1), Rational(2), Rational(-6), Rational(24)}));
}

TEST(Jensen, BridgeToQAndR) {
  for (const auto& spec : {MeasureSpec::hermite(), MeasureSpec::laguerre(Rational(0))}) {
    for (std::size_t n = 0; n <= 6; ++n) {
      for (std::size_t k = 0; k <= 3; ++k) {
        const auto bridge = jensen_qr_bridge(spec, n, k);
        EXPECT_TRUE(bridge.holds()) << spec.to_string() << " n=" << n << " k=" << k;
      }
    }
  }
  const auto b = jensen_qr_bridge(MeasureSpec::hermite(), 2, 0);
  EXPECT_EQ(b.g, UniPoly({Rational(1), Rational(0), Rational(1, 2)}));
  EXPECT_EQ(b.g_from_q, b.g);
}

TEST(Classical, Examples) {
  EXPECT_EQ(classical_poly(MeasureSpec::hermite(), 2), UniPoly({Rational(-2), Rational(0), Rational(4)}));
  EXPECT_EQ(classical_poly(MeasureSpec::laguerre(Rational(0)), 1), UniPoly({Rational(1), Rational(-1)}));
  EXPECT_EQ(classical_poly(MeasureSpec::gegenbauer(Rational(1, 2)), 2),
            UniPoly({Rational(-1, 2), Rational(0), Rational(3, 2)}));
  EXPECT_THROW(classical_poly(MeasureSpec::gegenbauer(Rational(0)), 2), std::invalid_argument);
  EXPECT_THROW(classical_poly(MeasureSpec::explicit_moments({Rational(1)}), 1), std::invalid_argument);
}

TEST(Classical, LeadingCoefficients) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto nn = static_cast<unsigned>(n);
    EXPECT_EQ(classical_poly(MeasureSpec::hermite(), n).leading(), Rational(2).pow(nn));
    EXPECT_EQ(classical_poly(MeasureSpec::laguerre(Rational(3, 2)), n).leading(),
              Rational(n % 2 ? -1 : 1) / factorial(nn));
    const Rational lam(5, 2);
    EXPECT_EQ(classical_poly(MeasureSpec::gegenbauer(lam), n).leading(),
              rising(lam, nn) * Rational(2).pow(nn) / factorial(nn));
  }
}

TEST(Classical, GegenbauerHypergeometricForm) {
  // gamma * sum_k (-n/2)_k ((1-n)/2)_k / ((1-n-lambda)_k k!) x^{n-2k}
  for (const Rational& lam : {Rational(1, 2), Rational(3, 2), Rational(5, 2), Rational(1, 3)}) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto nn = static_cast<long>(n);
      const Rational gamma = rising(lam, static_cast<unsigned>(n)) * Rational(2).pow(nn) / factorial(static_cast<unsigned>(n));
      std::vector<Rational> coeffs(n + 1);
      for (std::size_t k = 0; 2 * k <= n; ++k) {
        const auto kk = static_cast<unsigned>(k);
        coeffs[n - 2 * k] = gamma * rising(Rational(-nn, 2), kk) * rising(Rational(1 - nn, 2), kk) /
                            (rising(Rational(1 - nn) - lam, kk) * factorial(kk));
      }
      EXPECT_EQ(gegenbauer_poly(lam, n), UniPoly(coeffs));
    }
  }
}

TEST(Classical, OrthPolyIsScaledClassical) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto nn = static_cast<unsigned>(n);
    const auto h = MeasureSpec::hermite();
    EXPECT_EQ(orth_poly(h, n), classical_poly(h, n) * (hankel_det(h, static_cast<long>(n) - 1) / Rational(2).pow(nn)));
    const auto l = MeasureSpec::laguerre(Rational(3, 2));
    EXPECT_EQ(orth_poly(l, n), classical_poly(l, n) * (hankel_det(l, static_cast<long>(n) - 1) *
                                                       factorial(nn) * Rational(n % 2 ? -1 : 1)));
  }
}

TEST(Classical, ClosedQMatchesShiftedMoments) {
  auto specs = classical_specs();
  specs.push_back(MeasureSpec::laguerre(Rational(-1, 2)));
  specs.push_back(MeasureSpec::gegenbauer(Rational(0)));
  for (const auto& spec : specs) {
    for (std::size_t n = 0; n <= 6; ++n) {
      EXPECT_EQ(classical_q_closed(spec, n), q_poly(spec, n)) << spec.to_string() << " n=" << n;
    }
  }
  EXPECT_EQ(classical_q_closed(MeasureSpec::hermite(), 1), UniPoly({Rational(0), Rational(-1)}));
  EXPECT_EQ(classical_q_closed(MeasureSpec::laguerre(Rational(0)), 1), UniPoly({Rational(1), Rational(-1)}));
}
