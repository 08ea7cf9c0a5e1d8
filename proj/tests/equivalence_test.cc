#include <gtest/gtest.h>

#include "rhomboid/equivalence.h"
#include "rhomboid/errors.h"

namespace rhomboid {
namespace {

EquivalenceOptions Exact() { return {}; }

EquivalenceOptions Randomized(std::uint64_t seed = 0) {
  EquivalenceOptions o;
  o.mode = EquivalenceMode::kRandomized;
  o.randomized.seed = seed;
  return o;
}

TEST(EquivalenceTest, SeriesParallelExample) {
  StDag g = BuildSeriesParallelExample();
  Expr factored = Parse("(a*(b+c)+f)*(d+e)");
  Expr canonical = CanonicalExpression(g);
  EXPECT_EQ(Complexity(factored), 6u);
  EXPECT_EQ(Complexity(canonical), 16u);
  EXPECT_TRUE(Equivalent(factored, canonical, Exact()));
  EXPECT_TRUE(Equivalent(factored, canonical, Randomized()));
  OracleVerdict v = CheckAgainstPaths(factored, g, g.source(), g.sink());
  EXPECT_EQ(v.mode, EquivalenceMode::kExact);
  EXPECT_TRUE(v.equivalent);
}

TEST(EquivalenceTest, ForbiddenSubgraphFactorizations) {
  StDag g = BuildFibonacci(4);
  Expr left = Parse("a1*(a2*a3+b2)+b1*a3");
  Expr right = Parse("(a1*a2+b1)*a3+a1*b2");
  EXPECT_EQ(Complexity(left), 6u);
  EXPECT_EQ(Complexity(right), 6u);
  EXPECT_EQ(Complexity(CanonicalExpression(g)), 7u);
  EXPECT_TRUE(Equivalent(left, right, Exact()));
  EXPECT_TRUE(CheckAgainstPaths(left, g, g.source(), g.sink()).equivalent);
  EXPECT_TRUE(CheckAgainstPaths(right, g, g.source(), g.sink(), Randomized()).equivalent);
}

TEST(EquivalenceTest, DetectsDifferences) {
  Expr a = Parse("a1*(b1+c1)");
  EXPECT_FALSE(Equivalent(a, Parse("a1*b1+a1*c1+a1*c1"), Exact()));
  EXPECT_FALSE(Equivalent(a, Parse("a1*b1+a1*c1+a1*c1"), Randomized()));
  EXPECT_FALSE(Equivalent(a, Parse("a1*b1"), Randomized()));
  EXPECT_TRUE(Equivalent(a, Parse("a1*c1+a1*b1"), Exact()));
}

TEST(EquivalenceTest, ExactRespectsOrderRandomizedDoesNot) {
  Expr a = Parse("a1*b1");
  Expr b = Parse("b1*a1");
  EquivalenceReport r = CheckEquivalence(a, b);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_FALSE(*r.exact);
  EXPECT_TRUE(r.randomized);
  EXPECT_TRUE(r.disagree());
}

TEST(EquivalenceTest, FallsBackWhenTooLarge) {
  EquivalenceOptions o;
  o.expansion_bound = 100;
  Expr canonical = CanonicalExpression(BuildFsr(4));
  EquivalenceReport r = CheckEquivalence(canonical, canonical, o);
  EXPECT_FALSE(r.exact.has_value());
  EXPECT_TRUE(r.randomized);
  OracleVerdict v = CheckAgainstPaths(canonical, BuildFsr(4), Basic(1), Basic(4), o);
  EXPECT_EQ(v.mode, EquivalenceMode::kRandomized);
  EXPECT_TRUE(v.equivalent);
}

TEST(EquivalenceTest, UnknownLabelFailsOracle) {
  StDag g = BuildFsr(2);
  OracleVerdict v = CheckAgainstPaths(Parse("b1+e1*e2+d1*d2+g1"), g, g.source(), g.sink());
  EXPECT_FALSE(v.equivalent);
  EXPECT_FALSE(v.detail.empty());
}

TEST(EquivalenceTest, RandomizedIsDeterministicPerSeed) {
  std::vector<EdgeLabel> labels{Label(Series::kA, 1), Label(Series::kB, 2)};
  auto x = LabelAssignment::ForLabels(labels, kMersenne61, 5);
  auto y = LabelAssignment::ForLabels(labels, kMersenne61, 5);
  auto z = LabelAssignment::ForLabels(labels, kMersenne61, 6);
  EXPECT_EQ(x.Residue(labels[0]), y.Residue(labels[0]));
  EXPECT_NE(x.Residue(labels[0]), z.Residue(labels[0]));
  std::vector<EdgeLabel> more{Label(Series::kA, 1)};
  EXPECT_EQ(LabelAssignment::ForLabels(more, kMersenne61, 5).Residue(labels[0]),
            x.Residue(labels[0]));
  for (EdgeLabel l : labels) {
    EXPECT_GE(x.Residue(l), 1u);
    EXPECT_LT(x.Residue(l), kMersenne61);
  }
}

TEST(EquivalenceTest, AssignmentErrors) {
  std::vector<EdgeLabel> labels{Label(Series::kA, 1)};
  EXPECT_THROW(LabelAssignment::ForLabels(labels, 15, 0), std::invalid_argument);
  EXPECT_THROW(LabelAssignment::ForLabels(labels, 1, 0), std::invalid_argument);
  auto asg = LabelAssignment::ForLabels(labels, 101, 0);
  EXPECT_THROW(asg.Residue(Label(Series::kB, 1)), AssignmentIncompleteError);
  EXPECT_THROW(EvalMod(Parse("b1"), asg), AssignmentIncompleteError);
  EXPECT_THROW(asg.Set(labels[0], 0), std::invalid_argument);
  EXPECT_THROW(asg.Set(labels[0], 101), std::invalid_argument);
  asg.Set(labels[0], 7);
  EXPECT_EQ(EvalMod(Parse("a1*a1+1"), asg), 50u);
}

TEST(ModArithTest, Primes) {
  EXPECT_TRUE(IsPrime(kMersenne61));
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(1'000'000'007));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(561));
  EXPECT_FALSE(IsPrime(3215031751ull));
  EXPECT_EQ(MulMod(kMersenne61 - 1, kMersenne61 - 1, kMersenne61), 1u);
  EXPECT_EQ(PowMod(3, kMersenne61 - 1, kMersenne61), 1u);
}

}  // namespace
}  // namespace rhomboid
