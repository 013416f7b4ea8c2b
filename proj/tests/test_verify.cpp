#include <gtest/gtest.h>

#include <cmath>

#include "opdet/dets.hpp"
#include "opdet/errors.hpp"
#include "opdet/opoly.hpp"
#include "opdet/report_json.hpp"
#include "opdet/symmetric.hpp"
#include "opdet/verify.hpp"
#include "oracles.hpp"

using namespace opdet;

namespace {

SamplePlan small_plan() {
  SamplePlan plan;
  plan.n_max = 2;
  plan.m_max = 2;
  plan.mult_sum_max = 3;
  plan.tuples_per_shape = 3;
  return plan;
}

// Hermite moments as an explicit list, so the path through MeasureSpec::hermite is not reused
MeasureSpec hermite_list(std::size_t count) {
  return MeasureSpec::explicit_moments(oracle::hermite_moments(count));
}

}  // namespace

TEST(Registry, NamesRoundTrip) {
  EXPECT_EQ(all_identities().size(), 28u);
  for (IdentityId id : all_identities()) EXPECT_EQ(parse_identity(identity_name(id)), id);
  EXPECT_THROW(parse_identity("LEC_X"), std::invalid_argument);
  EXPECT_TRUE(is_conjecture(IdentityId::F_DOUBLE_GAP));
  EXPECT_FALSE(is_conjecture(IdentityId::F_GAP));
}

TEST(Registry, FamilySpecificIds) {
  const auto lag = MeasureSpec::laguerre(0);
  EXPECT_FALSE(applies_to(IdentityId::HERMITE_MAIN, lag));
  EXPECT_TRUE(applies_to(IdentityId::LAGUERRE_MAIN, lag));
  EXPECT_FALSE(applies_to(IdentityId::GL_CONVERGENCE, MeasureSpec::hermite()));
  EXPECT_FALSE(applies_to(IdentityId::GEGEN_MAIN, MeasureSpec::gegenbauer(0)));
  EXPECT_THROW(verify_identity(IdentityId::HERMITE_MAIN, lag), InfeasiblePlan);
  for (IdentityId id : all_identities())
    for (const auto& spec : default_specs(id)) EXPECT_TRUE(applies_to(id, spec)) << identity_name(id);
}

TEST(Registry, PoolTooSmallIsInfeasible) {
  SamplePlan plan = small_plan();
  plan.node_pool = {0, 1};
  plan.m_max = 3;
  EXPECT_THROW(verify_identity(IdentityId::LEC_R, MeasureSpec::hermite(), plan), InfeasiblePlan);
}

TEST(Selberg, Examples) {
  const auto h = MeasureSpec::hermite();
  const Rational x(7, 3);
  EXPECT_EQ(selberg_integral(h, 1, NodeSet{}, x), -x);
  EXPECT_EQ(selberg_integral(h, 1, NodeSet{{0, 2}}), Rational(1, 2));
  EXPECT_EQ(selberg_integral(h, 0, NodeSet{{1, 3}}), Rational(1));
  EXPECT_EQ(selberg_integral(MeasureSpec::laguerre(2), 0, NodeSet{}, x), Rational(1));
  EXPECT_THROW(selberg_integral(h, 5, NodeSet{}), std::invalid_argument);
  EXPECT_THROW(selberg_integral(hermite_list(3), 2, NodeSet{{0, 2}}), InsufficientMoments);
}

TEST(Selberg, TwoVariableHandExpansion) {
  // (1/2) \int\int (s1 - s2)^2 = mu_2 mu_0 - mu_1^2 = det M_1
  for (const auto& spec : {MeasureSpec::hermite(), MeasureSpec::laguerre(Rational(1, 2)),
                           MeasureSpec::gegenbauer(Rational(3, 2))}) {
    const Rational mu0 = moment(spec, 0), mu1 = moment(spec, 1), mu2 = moment(spec, 2);
    EXPECT_EQ(selberg_integral(spec, 2, NodeSet{}), mu2 * mu0 - mu1 * mu1);
  }
}

TEST(Selberg, MatchesPnIntegralRepresentation) {
  // (-1)^n p_n(x) = (1/n!) \int prod (s_j - x) prod_{i<j} (s_i - s_j)^2
  const auto lag = MeasureSpec::laguerre(Rational(3, 2));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long k = -2; k <= 2; ++k) {
      const Rational x(k, 3);
      const Rational p = orth_poly(lag, n)(x);
      EXPECT_EQ(selberg_integral(lag, n, NodeSet{}, x), n % 2 ? -p : p);
    }
  }
}

TEST(Verify, CorLecHermiteWitness) {
  SamplePlan plan;
  plan.n_max = 2;
  plan.m_max = 3;
  plan.seed = 7;
  const auto report = verify_identity(IdentityId::COR_LEC_R, MeasureSpec::hermite(), plan);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.cases_run, 7u);  // six (n, m) shapes plus the pinned witness

  const auto h = MeasureSpec::hermite();
  EXPECT_EQ(hankel_det(h, 2), Rational(1, 4));
  for (long k = -3; k <= 3; ++k) {
    const Rational x(k, 2);
    EXPECT_EQ(wronskian(h, 2, 2, x), x.pow(4) / Rational(8) + Rational(3, 32));
  }
}

TEST(Verify, LecRHandExpansion) {
  const auto h = MeasureSpec::hermite();
  const std::vector<Rational> t{0, 1, 2};
  EXPECT_EQ(slater(h, 1, t) / vandermonde(t), Rational(3, 16));
  EXPECT_EQ(r_value(h, NodeSet::simple(t), 0), Rational(-3, 2));
  SamplePlan plan = small_plan();
  plan.node_pool = t;
  plan.n_max = 1;
  plan.m_max = 3;
  EXPECT_TRUE(verify_identity(IdentityId::LEC_R, h, plan).passed());
}

TEST(Verify, DeltaIntPinningCase) {
  const auto h = MeasureSpec::hermite();
  const NodeSet nodes{{0, 2}};
  const Rational lhs = slater_general(h, 1, nodes, RowPlan::standard(nodes));
  EXPECT_EQ(lhs, Rational(1, 4));
  EXPECT_EQ(Rational(1, 2) * selberg_integral(h, 1, nodes), lhs);
  // the printed constant doubles the right side
  const std::vector<unsigned> two{2};
  const Rational printed = structure_constant(StructureKind::CVec, h, 1, two, FactorialLimit::Printed).value;
  EXPECT_NE(printed * selberg_integral(h, 1, nodes), lhs);
}

TEST(Verify, PnDetqAnySpec) {
  for (const auto& spec : {MeasureSpec::hermite(), MeasureSpec::laguerre(3), hermite_list(6)}) {
    const UniPoly q1 = q_poly(spec, 1);
    EXPECT_EQ(-q1, (UniPoly{-moment(spec, 1), moment(spec, 0)}));
    EXPECT_TRUE(verify_identity(IdentityId::PN_DETQ, spec, small_plan()).passed());
  }
}

TEST(Verify, EveryIdPassesOnASmallPlan) {
  const SamplePlan plan = small_plan();
  for (IdentityId id : all_identities()) {
    if (id == IdentityId::GL_CONVERGENCE) continue;  // its own test below
    const auto spec = default_specs(id).front();
    const auto report = verify_identity(id, spec, plan);
    EXPECT_TRUE(report.passed()) << identity_name(id) << " on " << spec.to_string() << ": "
                                 << (report.failures.empty() ? "" : report.failures.front().lhs);
    EXPECT_GT(report.cases_run, 0u) << identity_name(id);
  }
}

TEST(Verify, ExplicitSpecSkipsWhatItCannotFeed) {
  const auto report = verify_identity(IdentityId::MAIN, hermite_list(6), small_plan());
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.cases_skipped, 0u);
  EXPECT_GT(report.cases_run, 0u);
}

TEST(Verify, DeterministicForFixedSeed) {
  SamplePlan plan = small_plan();
  plan.seed = 99;
  const auto a = report_json(verify_identity(IdentityId::MAIN, MeasureSpec::laguerre(1), plan)).dump();
  const auto b = report_json(verify_identity(IdentityId::MAIN, MeasureSpec::laguerre(1), plan)).dump();
  EXPECT_EQ(a, b);
  plan.seed = 100;
  const auto c = report_json(verify_identity(IdentityId::MAIN, MeasureSpec::laguerre(1), plan)).dump();
  EXPECT_EQ(report_json(verify_identity(IdentityId::MAIN, MeasureSpec::laguerre(1), plan)).dump(), c);
}

TEST(Verify, SuiteIgnoresConjectureFailures) {
  VerifyReport good;
  VerifyReport conj;
  conj.conjecture = true;
  conj.failures.push_back({{{"n", "1"}}, "1", "2"});
  EXPECT_TRUE(suite_passed({good, conj}));
  VerifyReport bad;
  bad.failures.push_back({{}, "1", "2"});
  EXPECT_FALSE(suite_passed({good, bad}));
}

TEST(ReportJson, Schema) {
  VerifyReport r;
  r.identity = "LEC_R";
  r.spec = "hermite";
  r.cases_run = 3;
  r.failures.push_back({{{"n", "2"}, {"nodes", "0,1/2"}}, "1/4", "-1/4"});
  const auto j = report_json(r);
  EXPECT_EQ(j["identity"], "LEC_R");
  EXPECT_EQ(j["plan"]["seed"], SamplePlan::kDefaultSeed);
  EXPECT_EQ(j["plan"]["ranges"]["n_max"], 3);
  EXPECT_EQ(j["plan"]["node_pool"][3], "1/2");
  EXPECT_EQ(j["failures"][0]["params"]["nodes"], "0,1/2");
  EXPECT_EQ(j["failures"][0]["rhs"], "-1/4");
  EXPECT_EQ(j["status"], "fail");
  r.failures.clear();
  EXPECT_EQ(report_json(r)["status"], "pass");
}

TEST(Positivity, HermiteExamples) {
  const auto h = MeasureSpec::hermite();
  const std::vector<unsigned> two{2};
  const auto r = positivity_scan(h, 1, two, 50, 3, {});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases_run, 50u + 25u);
  EXPECT_EQ(wronskian(h, 1, 2, Rational(0)), Rational(1, 4));

  const std::vector<unsigned> two_two{2, 2};
  const std::vector<Rational> nodes{0, 1};
  const auto pinned = positivity_scan(h, 1, two_two, 0, 0, nodes);
  EXPECT_TRUE(pinned.passed());
  EXPECT_EQ(pinned.cases_run, 1u);
}

TEST(Positivity, RejectsBadInput) {
  const auto h = MeasureSpec::hermite();
  const std::vector<unsigned> odd{2, 3};
  EXPECT_THROW(positivity_scan(h, 1, odd, 5, 1, {}), std::invalid_argument);
  const std::vector<unsigned> two_two{2, 2};
  const std::vector<Rational> same{1, 1};
  EXPECT_THROW(positivity_scan(h, 1, two_two, 5, 1, same), std::invalid_argument);
  const std::vector<unsigned> none;
  EXPECT_THROW(positivity_scan(h, 1, none, 5, 1, {}), std::invalid_argument);
}

TEST(Positivity, ClassicalFamilies) {
  for (const auto& spec : {MeasureSpec::laguerre(Rational(3, 2)), MeasureSpec::gegenbauer(Rational(1, 2))}) {
    for (std::size_t n = 1; n <= 2; ++n) {
      const std::vector<unsigned> m{2, 2};
      EXPECT_TRUE(positivity_scan(spec, n, m, 20, 11, {}).passed());
    }
  }
}

TEST(JensenConvergence, LaguerreTable) {
  const auto table = jensen_convergence(MeasureSpec::laguerre(0), Rational(1, 2), 64);
  ASSERT_EQ(table.rows.size(), 64u);
  EXPECT_EQ(table.rows[0].value, Rational(1, 2));
  EXPECT_NEAR(*table.rows[0].target, 2.0 / 3.0, 1e-15);
  EXPECT_LT(*table.rows[63].error, *table.rows[15].error);
  EXPECT_LT(*table.rows[63].error, 0.01);
  // g_m(y) for gamma_k = (-1)^k k!: sum_j C(m,j) (-1)^j j! y^j
  for (std::size_t m : {1u, 2u, 5u, 9u}) {
    const Rational y = Rational(1, 2) / Rational(static_cast<long>(m));
    Rational expected;
    for (unsigned j = 0; j <= m; ++j)
      expected += binomial(static_cast<unsigned>(m), j) * Rational(j % 2 ? -1 : 1) * factorial(j) * y.pow(j);
    EXPECT_EQ(table.rows[m - 1].value, expected);
  }
  for (const auto& row : table.rows) {
    if (row.wronskian_form) EXPECT_EQ(*row.wronskian_form, row.value) << row.m;
    if (row.m % 2 == 0)
      for (const auto& d : row.laplace_dets) EXPECT_GE(d.sign(), 0);
  }
  EXPECT_TRUE(table.rows[5].wronskian_form.has_value());
  EXPECT_FALSE(table.rows[6].wronskian_form.has_value());
}

TEST(JensenConvergence, AtZero) {
  const auto table = jensen_convergence(MeasureSpec::laguerre(0), Rational(0), 5);
  for (const auto& row : table.rows) {
    EXPECT_EQ(row.value, Rational(1));
    EXPECT_EQ(*row.error, 0.0);
  }
}

TEST(JensenConvergence, ExplicitAndErrors) {
  std::vector<Rational> lag_moments;
  for (unsigned k = 0; k < 24; ++k) lag_moments.push_back(factorial(k));
  const auto table = jensen_convergence(MeasureSpec::explicit_moments(lag_moments), Rational(1, 2), 8);
  const auto reference = jensen_convergence(MeasureSpec::laguerre(0), Rational(1, 2), 8);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(table.rows[i].value, reference.rows[i].value);
    EXPECT_FALSE(table.rows[i].target.has_value());
  }
  EXPECT_THROW(jensen_convergence(MeasureSpec::explicit_moments(lag_moments), Rational(1, 2), 40),
               InsufficientMoments);
  EXPECT_THROW(jensen_convergence(MeasureSpec::hermite(), Rational(1, 2), 4), std::invalid_argument);
  EXPECT_THROW(jensen_convergence(MeasureSpec::laguerre(0), Rational(-1, 2), 4), std::invalid_argument);
}

TEST(Decimal, ShortestRoundTrip) {
  EXPECT_EQ(decimal(0.5), "0.5");
  EXPECT_EQ(decimal(2.0 / 3.0), "0.6666666666666666");
  EXPECT_EQ(std::stod(decimal(0.1 + 0.2)), 0.1 + 0.2);
}
