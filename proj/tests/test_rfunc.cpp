#include <gtest/gtest.h>

#include "ncreal/rfunc.hpp"
#include "support.hpp"

namespace ncreal {
namespace {

SamplingOptions opts(std::uint64_t seed, Index m = 1) {
  SamplingOptions o;
  o.seed = seed;
  o.m_start = m;
  return o;
}

TEST(Sampling, EscalatesSizeUntilDomainIsNonempty) {
  const Expr e = parse("inv(z1*z2 - z2*z1)");
  const MatTuple p = find_domain_point({e}, 2, opts(0));
  EXPECT_EQ(p.size(), 2);
  SamplingOptions capped = opts(0);
  capped.m_cap = 1;
  EXPECT_THROW(find_domain_point({e}, 2, capped), NoDomainPoint);
  capped.m_cap = 0;
  EXPECT_THROW(find_domain_point({e}, 2, capped), UsageError);
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
}

TEST(Identity, KnownIdentitiesAndNonIdentities) {
  const char* hua = "inv(z1 + z1*z2*z1) - inv(z1) + inv(z1 + inv(z2))";
  EXPECT_TRUE(is_rational_identity(parse(hua), 2, opts(0)).identity);
  EXPECT_TRUE(is_rational_identity(parse("(z1+z2)*(z1+z2) - z1*z1 - z1*z2 - z2*z1 - z2*z2"), 2, opts(0)).identity);
  EXPECT_FALSE(is_rational_identity(parse("z1*z2 - z2*z1"), 2, opts(0)).identity);
  EXPECT_FALSE(is_rational_identity(parse("inv(1 + z1*z1) - inv(1 + z1)"), 1, opts(0)).identity);
  EXPECT_TRUE(are_equal(parse("inv(z1*z2)"), parse("inv(z2)*inv(z1)"), 2, opts(3)));
  EXPECT_FALSE(are_equal(parse("inv(z1*z2)"), parse("inv(z1)*inv(z2)"), 2, opts(3)));
}

TEST(Identity, SameAnswerAcrossSeeds) {
  const Expr e = parse("z1*inv(1 + z2*z1) - inv(1 + z1*z2)*z1");
  for (std::uint64_t seed : {0u, 1u, 2u, 3u}) EXPECT_TRUE(is_rational_identity(e, 2, opts(seed, 2)).identity);
}

TEST(Bounds, Formulas) {
  EXPECT_EQ(identity_test_size(2, 9), 18);
  EXPECT_EQ(identity_test_size(3, 5), 24);   // 3 * ceil(15/2)
  EXPECT_EQ(identity_test_size(1, 1), 1);
  EXPECT_EQ(dependence_test_size(2, 3, 2), Rational(120));  // 4 * 6 * 10 / 2
  EXPECT_EQ(dependence_test_size(1, 1, 1), Rational(7, 2));
  EXPECT_EQ(degree_lower_bound(2, 18), Rational(10));
  EXPECT_EQ(degree_lower_bound(3, 4), Rational(17, 9));
}

TEST(Degree, MinimalRealizationCertificate) {
  const MinimalRealization mr = minimal_realization(parse("inv(z1*z2 - z2*z1)"), 2, opts(0, 2));
  EXPECT_EQ(mr.realization.n, 3);
  EXPECT_EQ(mr.certificate.degree, 3);
  EXPECT_TRUE(mr.certificate.totally_reduced_achieved);
  EXPECT_FALSE(mr.certificate.witness_points.empty());
  const MinimalRealization zero = minimal_realization(parse("z1 - z1"), 1, opts(0));
  EXPECT_EQ(zero.realization.n, 0);
  EXPECT_EQ(zero.certificate.degree, 0);
}

TEST(Dependence, FindsAndVerifiesRelations) {
  const DependenceReport dep =
      linear_dependence({parse("z1*z2"), parse("z2*z1"), parse("z1*z2 - z2*z1")}, 2, opts(0));
  ASSERT_EQ(dep.status, Dependence::Dependent);
  EXPECT_EQ(dep.lambda, (std::vector<Rational>{Rational(1), Rational(-1), Rational(-1)}));
  const DependenceReport ind = linear_dependence({parse("z1"), parse("z2"), parse("z1*z2")}, 2, opts(0));
  EXPECT_EQ(ind.status, Dependence::Independent);
  const DependenceReport inv =
      linear_dependence({parse("inv(1 - z1)"), parse("z1*inv(1 - z1)"), parse("1")}, 1, opts(5));
  ASSERT_EQ(inv.status, Dependence::Dependent);
  EXPECT_EQ(inv.lambda, (std::vector<Rational>{Rational(1), Rational(-1), Rational(-1)}));
}

TEST(Dependence, CapelliDetectsDependence) {
  // c_2 vanishes when its arguments are dependent, and not otherwise.
  const Expr c = capelli({parse("z1 + z2"), parse("2*z1 + 2*z2")}, {parse("z3")});
  EXPECT_TRUE(is_rational_identity(c, 3, opts(0)).identity);
  EXPECT_FALSE(is_rational_identity(capelli(2), 3, opts(0)).identity);
}

TEST(Domain, PencilCriterion) {
  const Expr e = parse("inv(1 - z1)");
  const MatTuple zero = MatTuple::zeros(1, 1);
  const Reduction red = reduce(from_expr(e, zero));
  ASSERT_TRUE(red.totally_reduced);
  auto scalar = [](long v) { return MatTuple{{MatQ::Constant(1, 1, Rational(v))}}; };
  EXPECT_FALSE(domain_member(red.realization, scalar(1)));
  EXPECT_TRUE(domain_member(red.realization, scalar(2)));
  EXPECT_TRUE(domain_member(red.realization, scalar(0)));
  // Not totally reduced: the criterion does not apply.
  EXPECT_THROW(domain_member(from_expr(parse("z1 - z1 + inv(1 - z1)"), zero), scalar(2)), NotTotallyReduced);
}

TEST(Domain, CommutingPairsLeaveCommutatorInverseDomain) {
  const Expr e = parse("inv(z1*z2 - z2*z1)");
  const MinimalRealization mr = minimal_realization(e, 2, opts(1, 2));
  ASSERT_TRUE(mr.certificate.totally_reduced_achieved);
  PointSampler ps(3);
  for (int trial = 0; trial < 5; ++trial) {
    const MatQ a = ps.matrix(2);
    const MatQ b = Rational(2) * a * a - Rational(trial) * a + MatQ::Identity(2, 2);
    EXPECT_FALSE(domain_member(mr.realization, MatTuple{{a, b}}));
    const MatTuple q = ps.tuple(2, 4);
    bool in_dom = true;
    try {
      eval_expr(e, q);
    } catch (const DomainError&) {
      in_dom = false;
    }
    EXPECT_EQ(domain_member(mr.realization, q), in_dom);
  }
}

}  // namespace
}  // namespace ncreal
