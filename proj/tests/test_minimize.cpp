#include <gtest/gtest.h>

#include "ncreal/minimize.hpp"
#include "support.hpp"

namespace ncreal {
namespace {

using testing::Entry;
using testing::entries_op;
using testing::identity;
using testing::unit;

const MatQ e11 = unit(2, 0, 0), e21 = unit(2, 1, 0), e22 = unit(2, 1, 1);

Realization make(const MatQ& c, const BimodOp& A, const MatQ& b) {
  Realization r;
  r.m = 2;
  r.g = 1;
  r.n = A.n_out();
  r.point = MatTuple::zeros(1, 2);
  r.c = c;
  r.b = b;
  r.A = {A};
  r.validate();
  return r;
}

// (e11, e22 x, e22): the zero series in dimension 1.
Realization zero_series_dim1() { return make(e11, entries_op(2, 1, {{0, 0, e22, identity(2)}}), e22); }

// (( e11 1 ), diag(e22 x, e11 x), ( e22 ; 1 )): sum (e11 x)^i in dimension 2.
Realization reduced_not_minimal() {
  MatQ c(2, 4), b(4, 2);
  c << e11, identity(2);
  b << e22, identity(2);
  return make(c, entries_op(2, 2, {{0, 0, e22, identity(2)}, {1, 1, e11, identity(2)}}), b);
}

// Left reduction of this one uncovers a right obstruction.
Realization one_sided() {
  MatQ c(2, 6), b = MatQ::Zero(6, 2);
  c << e11, e21, MatQ::Zero(2, 2);
  b.bottomRows(2) = e11;
  const BimodOp A = entries_op(2, 3,
                               {{0, 0, identity(2), e22},
                                {0, 1, identity(2), e22},
                                {1, 1, e22, e22},
                                {1, 2, e11, identity(2)},
                                {2, 2, identity(2), identity(2)}});
  return make(c, A, b);
}

bool same_series(const Realization& a, const Realization& b, int order) {
  for (const Word& w : words_up_to(a.g, order))
    if (!(coeff(a, w) == coeff(b, w))) return false;
  return true;
}

TEST(Obstructions, Classification) {
  EXPECT_EQ(classify_obstruction(0, 2), ObstructionClass::Trivial);
  EXPECT_EQ(classify_obstruction(1, 2), ObstructionClass::Torsion);
  EXPECT_EQ(classify_obstruction(2, 2), ObstructionClass::HasFreePart);
  EXPECT_EQ(to_string(ObstructionClass::HasFreePart), "has_free_part");
}

TEST(ZeroSeries, DimensionOneExample) {
  const Realization r = zero_series_dim1();
  EXPECT_TRUE(is_zero_series(r));
  EXPECT_EQ(sylvester_degree_of(r), 0);
  const Reduction red = reduce(r);
  EXPECT_EQ(red.realization.n, 1);
  EXPECT_FALSE(red.totally_reduced);
  EXPECT_EQ(red.report.left_class, ObstructionClass::Torsion);
  EXPECT_EQ(red.report.right_class, ObstructionClass::Torsion);
  EXPECT_EQ(red.report.left_dim, 1);
  EXPECT_EQ(red.report.right_dim, 1);
}

TEST(ZeroSeries, ZeroRealizationIsZero) {
  const Realization z = zero_rep(MatTuple::zeros(2, 2));
  EXPECT_EQ(z.n, 0);
  EXPECT_TRUE(is_zero_series(z));
  EXPECT_EQ(sylvester_degree_of(z), 0);
}

TEST(Reduce, ReducedButNotMinimal) {
  const Realization r = reduced_not_minimal();
  EXPECT_FALSE(is_zero_series(r));
  const ModuleSpaces sp = module_spaces(r);
  const ObstructionReport rep = obstruction_report(r, sp);
  // Obstruction modules: (a e11 + b e21, 0) on the left, (a e21 + b e22; 0) on the right.
  EXPECT_EQ(rep.left_dim, 1);
  EXPECT_EQ(rep.right_dim, 1);
  EXPECT_EQ(rep.left_class, ObstructionClass::Torsion);
  const Reduction red = reduce(r);
  EXPECT_EQ(red.realization.n, 2);
  EXPECT_EQ(sylvester_degree_of(r), 1);
  EXPECT_EQ(red.realization.n - sylvester_degree_of(r), 1);
  // Minimal realization (1, e11 x, 1) of the same series.
  const Realization minimal = make(identity(2), entries_op(2, 1, {{0, 0, e11, identity(2)}}), identity(2));
  EXPECT_TRUE(same_series(r, minimal, 4));
  EXPECT_EQ(sylvester_degree_of(minimal), 1);
}

TEST(Reduce, LeftStepCanCreateRightObstruction) {
  const Realization r = one_sided();
  const ModuleSpaces sp = module_spaces(r);
  const ObstructionReport before = obstruction_report(r, sp);
  EXPECT_EQ(before.right_dim, 0);
  EXPECT_EQ(before.left_class, ObstructionClass::HasFreePart);
  const Realization left = reduce_left(r, sp.ctrl);
  EXPECT_EQ(left.n, 2);
  EXPECT_TRUE(same_series(r, left, 4));
  EXPECT_GT(obstruction_report(left, module_spaces(left)).right_dim, 0);
  const Reduction red = reduce(r);
  EXPECT_TRUE(same_series(r, red.realization, 4));
  EXPECT_LE(red.realization.n - sylvester_degree_of(r), 1);
}

TEST(Reduce, CommutatorInverse) {
  const Expr e = parse("inv(z1*z2 - z2*z1)");
  for (std::uint64_t seed : {0u, 1u}) {
    const MatTuple p = *sample_domain_point(e, 2, 2, seed, 50).point;
    const Realization R = from_expr(e, p);
    EXPECT_EQ(R.n, 9);
    const Reduction red = reduce(R);
    EXPECT_EQ(red.realization.n, 3);
    EXPECT_TRUE(red.totally_reduced);
    EXPECT_EQ(red.report.left_class, ObstructionClass::Trivial);
    EXPECT_TRUE(same_series(R, red.realization, 2));
    EXPECT_EQ(sylvester_degree_of(R), 3);
  }
}

TEST(Reduce, CorpusGapAtMostOne) {
  for (const auto& it : testing::corpus(20, 314)) {
    const Realization R = from_expr(it.expr, it.point);
    const Reduction red = reduce(R);
    const Index d = sylvester_degree_of(R);
    EXPECT_GE(red.realization.n, d);
    EXPECT_LE(red.realization.n - d, 1) << it.expr.str();
    EXPECT_EQ(sylvester_degree_of(red.realization), d);
    EXPECT_TRUE(same_series(R, red.realization, 2)) << it.expr.str();
    if (red.totally_reduced) EXPECT_EQ(red.realization.n, d);
    EXPECT_EQ(is_zero_series(R), d == 0);
  }
}

TEST(Similarity, TotallyReducedRealizationsAreSimilar) {
  const Expr e1 = parse("inv(z1*z2 - z2*z1)");
  const Expr e2 = parse("-inv(z2*z1 - z1*z2)");
  const MatTuple p = *sample_domain_point(e1, 2, 2, 4, 50).point;
  const Reduction r1 = reduce(from_expr(e1, p)), r2 = reduce(from_expr(e2, p));
  ASSERT_TRUE(r1.totally_reduced);
  ASSERT_TRUE(r2.totally_reduced);
  const MatQ P = transition_matrix(r1.realization, r2.realization);
  const Realization& a = r1.realization;
  const Realization& b = r2.realization;
  ASSERT_TRUE(inverse(P).has_value());
  EXPECT_EQ(a.c, MatQ(b.c * P));
  EXPECT_EQ(MatQ(P * a.b), b.b);
  PointSampler ps(8);
  for (Index j = 0; j < 2; ++j) {
    const MatQ x = ps.matrix(2);
    EXPECT_EQ(MatQ(P * apply(a.A[static_cast<std::size_t>(j)], x)), MatQ(apply(b.A[static_cast<std::size_t>(j)], x) * P));
  }
  // Uniqueness: the transition from a realization to itself is the identity.
  EXPECT_EQ(transition_matrix(a, a), MatQ(MatQ::Identity(a.m * a.n, a.m * a.n)));
}

TEST(Similarity, DifferentFunctionsAreNotSimilar) {
  const MatTuple p = *sample_domain_point(parse("inv(z1*z2 - z2*z1)"), 2, 2, 4, 50).point;
  const Realization a = reduce(from_expr(parse("inv(z1*z2 - z2*z1)"), p)).realization;
  const Realization b = reduce(from_expr(parse("inv(z2*z1 - z1*z2)"), p)).realization;
  EXPECT_THROW(transition_matrix(a, b), NotSimilar);
  EXPECT_THROW(transition_matrix(zero_series_dim1(), zero_series_dim1()), NotUnique);
}

TEST(Degree, IndependentOfPointAndSize) {
  for (auto [text, expected] : {std::pair{"z1*z2 - z2*z1", 4}, std::pair{"inv(z1*z2 - z2*z1)", 3}}) {
    const Expr e = parse(text);
    for (Index m : {2, 3}) {
      for (std::uint64_t seed : {0u, 9u}) {
        const MatTuple p = *sample_domain_point(e, 2, m, seed, 50).point;
        EXPECT_EQ(sylvester_degree_of(from_expr(e, p)), expected) << text << " m=" << m;
      }
    }
  }
}

}  // namespace
}  // namespace ncreal
