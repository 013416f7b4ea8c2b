#include <gtest/gtest.h>

#include "opdet/errors.hpp"
#include "opdet/measures.hpp"
#include "opdet/symmetric.hpp"
#include "oracles.hpp"

using namespace opdet;

namespace {

MeasureSpec hermite_ladder() {
  return MeasureSpec::modified(MeasureSpec::hermite(), NodeSet{{Rational(0), 1}, {Rational(1), 1}, {Rational(2), 1}});
}

}  // namespace

TEST(Moments, Examples) {
  EXPECT_EQ(moment(MeasureSpec::hermite(), 2), Rational(1, 2));
  EXPECT_EQ(moment(MeasureSpec::laguerre(Rational(0)), 3), Rational(6));
  EXPECT_EQ(moment(MeasureSpec::gegenbauer(Rational(1, 2)), 2), Rational(1, 3));
  EXPECT_EQ(moment(hermite_ladder(), 0), Rational(-3, 2));
}

TEST(Moments, ClassicalMatchRecurrences) {
  const auto h = oracle::hermite_moments(21);
  for (std::size_t k = 0; k <= 20; ++k) EXPECT_EQ(moment(MeasureSpec::hermite(), k), h[k]) << k;
  for (const Rational& a : {Rational(-1, 2), Rational(0), Rational(3, 2)}) {
    const auto l = oracle::laguerre_moments(a, 12);
    for (std::size_t k = 0; k < 12; ++k) EXPECT_EQ(moment(MeasureSpec::laguerre(a), k), l[k]);
  }
  for (const Rational& lam : {Rational(1, 2), Rational(1), Rational(5, 2)}) {
    const auto g = oracle::gegenbauer_moments(lam, 21);
    for (std::size_t k = 0; k <= 20; ++k) EXPECT_EQ(moment(MeasureSpec::gegenbauer(lam), k), g[k]);
  }
}

TEST(Moments, OddClassicalMomentsVanish) {
  for (std::size_t k = 1; k <= 19; k += 2) {
    EXPECT_TRUE(moment(MeasureSpec::hermite(), k).is_zero());
    EXPECT_TRUE(moment(MeasureSpec::gegenbauer(Rational(3, 2)), k).is_zero());
  }
}

TEST(Moments, LegendreByDirectIntegral) {
  // lambda = 1/2 is dt/2 on [-1, 1]: mu_{2k} = 1/(2k+1)
  for (long k = 0; k <= 6; ++k) {
    EXPECT_EQ(moment(MeasureSpec::gegenbauer(Rational(1, 2)), 2 * k), Rational(1, 2 * k + 1));
  }
}

TEST(Moments, ModifiedMatchesSymmetricFunctionExpansion) {
  oracle::RationalGen gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<NodeEntry> entries;
    const std::size_t r = 1 + gen.below(3);
    for (std::size_t i = 0; i < r; ++i) entries.push_back({gen.next(), static_cast<unsigned>(1 + gen.below(2))});
    NodeSet nodes(entries);
    const auto base = MeasureSpec::laguerre(Rational(1, 2));
    const auto mod = MeasureSpec::modified(base, nodes);
    const auto expanded = nodes.expanded();
    const std::size_t m = expanded.size();
    for (std::size_t k = 0; k < 5; ++k) {
      Rational sum(0);
      for (std::size_t j = 0; j <= m; ++j) {
        Rational term = elem_sym(j, expanded) * moment(base, k + m - j);
        sum += (j % 2) ? -term : term;
      }
      EXPECT_EQ(moment(mod, k), sum);
    }
  }
}

TEST(Moments, ExplicitRunsOut) {
  const auto spec = MeasureSpec::explicit_moments({Rational(1), Rational(0), Rational(1, 2)});
  EXPECT_EQ(moment(spec, 2), Rational(1, 2));
  try {
    moment(spec, 3);
    FAIL() << "expected InsufficientMoments";
  } catch (const InsufficientMoments& e) {
    EXPECT_EQ(e.required_order(), 3u);
    EXPECT_EQ(e.available(), 3u);
  }
  EXPECT_THROW(MeasureSpec::explicit_moments({}), std::invalid_argument);
  // a node shifts the supply down by its multiplicity
  const auto mod = MeasureSpec::modified(spec, NodeSet{{Rational(1), 2}});
  EXPECT_EQ(mod.available_moments(), std::optional<std::size_t>(1));
  EXPECT_THROW(moment(mod, 1), InsufficientMoments);
}

TEST(Measures, ParameterDomains) {
  EXPECT_THROW(MeasureSpec::laguerre(Rational(-1)), std::invalid_argument);
  EXPECT_NO_THROW(MeasureSpec::laguerre(Rational(-99, 100)));
  EXPECT_THROW(MeasureSpec::gegenbauer(Rational(-1, 2)), std::invalid_argument);
  EXPECT_NO_THROW(MeasureSpec::gegenbauer(Rational(-49, 100)));
}

TEST(Hankel, MatrixExamples) {
  const auto h = hankel_matrix(MeasureSpec::hermite(), 1);
  EXPECT_EQ(h, SquareMatrix<Rational>::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1, 2)}}));
  EXPECT_EQ(hankel_matrix(MeasureSpec::explicit_moments({Rational(1)}), 0).order(), 1u);
  EXPECT_EQ(hankel_matrix(MeasureSpec::laguerre(Rational(0)), 1),
            SquareMatrix<Rational>::from_rows({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}));
  EXPECT_THROW(hankel_matrix(MeasureSpec::explicit_moments({Rational(1), Rational(0)}), 1), InsufficientMoments);
}

TEST(Hankel, DeterminantExamples) {
  EXPECT_EQ(hankel_det(MeasureSpec::hermite(), 2), Rational(1, 4));
  EXPECT_EQ(hankel_det(MeasureSpec::laguerre(Rational(0)), 1), Rational(1));
  EXPECT_EQ(hankel_det(MeasureSpec::explicit_moments({Rational(1)}), 0), Rational(1));
  EXPECT_EQ(hankel_det(MeasureSpec::hermite(), -1), Rational(1));
}

TEST(Hankel, ClosedFormsAgree) {
  std::vector<MeasureSpec> specs{MeasureSpec::hermite()};
  for (const Rational& a : {Rational(-1, 2), Rational(0), Rational(3, 2)}) specs.push_back(MeasureSpec::laguerre(a));
  for (const Rational& l : {Rational(1, 2), Rational(1), Rational(5, 2)}) specs.push_back(MeasureSpec::gegenbauer(l));
  for (const auto& spec : specs) {
    for (std::size_t n = 0; n <= 5; ++n) {
      EXPECT_EQ(hankel_det(spec, static_cast<long>(n)), closed_form_hankel_det(spec, n)) << spec.to_string() << " " << n;
    }
  }
  EXPECT_EQ(closed_form_hankel_det(MeasureSpec::laguerre(Rational(0)), 2), Rational(4));
  EXPECT_EQ(closed_form_hankel_det(MeasureSpec::hermite(), 0), Rational(1));
  EXPECT_THROW(closed_form_hankel_det(MeasureSpec::explicit_moments({Rational(1)}), 0), std::invalid_argument);
  EXPECT_THROW(closed_form_hankel_det(MeasureSpec::gegenbauer(Rational(0)), 1), std::invalid_argument);
}

TEST(Hankel, AgreesWithLeibniz) {
  const auto mu = oracle::laguerre_moments(Rational(3, 2), 9);
  for (std::size_t n = 0; n <= 3; ++n) {
    oracle::Grid g(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) g[i][j] = mu[i + j];
    EXPECT_EQ(hankel_det(MeasureSpec::laguerre(Rational(3, 2)), static_cast<long>(n)), oracle::leibniz_det(g));
  }
}

TEST(Validate, ClassicalFamiliesPass) {
  EXPECT_TRUE(validate_measure(MeasureSpec::hermite(), 6).positive_definite());
  EXPECT_TRUE(validate_measure(MeasureSpec::laguerre(Rational(-1, 2)), 6).positive_definite());
  EXPECT_TRUE(validate_measure(MeasureSpec::gegenbauer(Rational(5, 2)), 6).positive_definite());
  EXPECT_EQ(validate_measure(MeasureSpec::hermite(), 3).determinants.size(), 4u);
}

TEST(Validate, FlagsDegenerateAndSigned) {
  const auto rank_one = validate_measure(MeasureSpec::explicit_moments({Rational(1), Rational(0), Rational(0)}), 1);
  EXPECT_EQ(rank_one.first_nonpositive, std::optional<std::size_t>(1));
  EXPECT_TRUE(rank_one.determinants[1].is_zero());

  // t dmu for Hermite: moments mu_{k+1}, so det [[mu1, mu2], [mu2, mu3]] = -1/4
  const auto signed_report = validate_measure(MeasureSpec::modified(MeasureSpec::hermite(), NodeSet{{Rational(0), 1}}), 1);
  EXPECT_FALSE(signed_report.positive_definite());
  EXPECT_EQ(signed_report.first_nonpositive, std::optional<std::size_t>(0));
  EXPECT_EQ(signed_report.determinants[1], Rational(-1, 4));
  EXPECT_THROW(validate_measure(MeasureSpec::explicit_moments({Rational(1)}), 1), InsufficientMoments);
}

TEST(Grammar, ParsesEveryForm) {
  EXPECT_EQ(parse_measure("hermite"), MeasureSpec::hermite());
  EXPECT_EQ(parse_measure("laguerre:alpha=3/2"), MeasureSpec::laguerre(Rational(3, 2)));
  EXPECT_EQ(parse_measure("gegenbauer:lambda=1/2"), MeasureSpec::gegenbauer(Rational(1, 2)));
  EXPECT_EQ(parse_measure("moments:1,0,1/2"),
            MeasureSpec::explicit_moments({Rational(1), Rational(0), Rational(1, 2)}));
  EXPECT_EQ(parse_measure("modified(hermite;0^1,1,2^1)"), hermite_ladder());
  const auto nested = parse_measure("modified(modified(laguerre:alpha=0;1/2^2);-1)");
  EXPECT_EQ(nested.kind(), MeasureKind::Modified);
  EXPECT_EQ(nested.base().kind(), MeasureKind::Modified);
  EXPECT_EQ(nested.base().nodes().entries()[0].multiplicity, 2u);
}

TEST(Grammar, RoundTrips) {
  for (const char* text : {"hermite", "laguerre:alpha=-1/2", "gegenbauer:lambda=5/2", "moments:1,0,1/2,0,3/4",
                           "modified(hermite;0^1,1^1,2^1)", "modified(modified(laguerre:alpha=0;1/2^2);-1^1)"}) {
    EXPECT_EQ(parse_measure(text).to_string(), text);
  }
}

TEST(Grammar, RejectsMalformed) {
  for (const char* text : {"", "legendre", "laguerre", "laguerre:beta=1", "laguerre:alpha=-1", "moments:",
                           "modified(hermite)", "modified(hermite;0^0)", "modified(hermite;0^x)", "modified(hermite;0",
                           "gegenbauer:lambda=1/0"}) {
    EXPECT_THROW(parse_measure(text), std::invalid_argument) << text;
  }
}

TEST(NodeSetTest, BasicQueries) {
  NodeSet s{{Rational(0), 2}, {Rational(1), 1}};
  EXPECT_EQ(s.total_multiplicity(), 3u);
  EXPECT_EQ(s.expanded(), (std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));
  EXPECT_EQ(s.cross_product(), Rational(1));
  EXPECT_EQ(NodeSet({{Rational(0), 2}, {Rational(2), 3}}).cross_product(), Rational(64));
  EXPECT_THROW(NodeSet({{Rational(0), 0}}), std::invalid_argument);
  EXPECT_THROW(NodeSet({{Rational(1), 1}, {Rational(1), 2}}).require_distinct("op"), std::invalid_argument);
  EXPECT_EQ(s.node_polynomial(), UniPoly({Rational(0), Rational(0), Rational(-1), Rational(1)}));
}
