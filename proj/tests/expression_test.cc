#include <gtest/gtest.h>

#include "rhomboid/errors.h"
#include "rhomboid/expression.h"

namespace rhomboid {
namespace {

Expr L(char s, int i = 0) { return Expr::Literal(Label(*SeriesFromChar(s), i)); }

TEST(ExprTest, OneAndLiterals) {
  EXPECT_TRUE(Expr().is_one());
  EXPECT_EQ(Complexity(Expr::One()), 0u);
  EXPECT_EQ(Complexity(L('a', 3)), 1u);
  EXPECT_EQ(Render(Expr::One()), "1");
  EXPECT_EQ(Render(L('e', 12)), "e12");
  EXPECT_EQ(Render(L('f')), "f");
}

TEST(ExprTest, SmartConstructorsFlatten) {
  Expr a = L('a'), b = L('b'), c = L('c');
  Expr nested = Expr::Sum({a, Expr::Sum({b, c})});
  EXPECT_EQ(nested.children().size(), 3u);
  Expr prod = Expr::Product({Expr::One(), a, Expr::Product({b, Expr::One()}), c});
  EXPECT_EQ(prod.kind(), Expr::Kind::kProduct);
  EXPECT_EQ(prod.children().size(), 3u);
  EXPECT_EQ(Expr::Product({a}), a);
  EXPECT_TRUE(Expr::Product({}).is_one());
  EXPECT_TRUE(Expr::Product({Expr::One(), Expr::One()}).is_one());
  EXPECT_TRUE(IsNormalized(prod));
}

TEST(ExprTest, NormalizeRawTrees) {
  Expr a = L('a'), b = L('b'), c = L('c');
  Expr raw = Expr::RawProduct({Expr::RawProduct({a, Expr::One()}),
                               Expr::RawSum({Expr::RawSum({b}), c})});
  EXPECT_FALSE(IsNormalized(raw));
  Expr n = Normalize(raw);
  EXPECT_TRUE(IsNormalized(n));
  EXPECT_EQ(Render(n), "a*(b+c)");
  EXPECT_EQ(Complexity(raw), Complexity(n));
  EXPECT_EQ(Expand(raw), Expand(n));
}

TEST(ExprTest, SharedSubtreesCountEveryOccurrence) {
  Expr s = Expr::Sum({L('a', 1), L('b', 1), L('c', 1)});
  Expr e = Expr::Product({s, s, s});
  EXPECT_EQ(Complexity(e), 9u);
  Expr big = e;
  for (int i = 0; i < 40; ++i) big = Expr::RawSum({big, big});
  EXPECT_EQ(Complexity(big), 9ull << 40);
}

TEST(ExprTest, RenderParenthesizesSumsInProducts) {
  Expr e = Expr::Product({Expr::Sum({Expr::Product({L('a'), Expr::Sum({L('b'), L('c')})}),
                                     L('f')}),
                          Expr::Sum({L('d'), L('e')})});
  EXPECT_EQ(Render(e), "(a*(b+c)+f)*(d+e)");
  EXPECT_EQ(Complexity(e), 6u);
}

TEST(ExprTest, ExpandPreservesOrder) {
  Expr e = Expr::Product({Expr::Sum({L('a'), L('b')}), L('c')});
  MonomialMultiset m = Expand(e);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.begin()->first, (std::vector<EdgeLabel>{Label(Series::kA, 0), Label(Series::kC, 0)}));
  Expr swapped = Expr::Product({L('c'), Expr::Sum({L('a'), L('b')})});
  EXPECT_NE(Expand(swapped), m);
}

TEST(ExprTest, ExpandCountsMultiplicity) {
  Expr e = Expr::Sum({L('a'), L('a'), Expr::One(), Expr::One()});
  MonomialMultiset m = Expand(e);
  EXPECT_EQ(m[{}], 2u);
  EXPECT_EQ(m[{Label(Series::kA, 0)}], 2u);
}

TEST(ExprTest, MeasureAndBound) {
  Expr s = Expr::Sum({L('a', 1), L('b', 1)});
  std::vector<Expr> f(20, s);
  Expr e = Expr::Product(f);
  ExpansionSize size = MeasureExpansion(e);
  EXPECT_EQ(size.monomials, 1u << 20);
  EXPECT_EQ(size.symbols, 20u << 20);
  EXPECT_THROW(Expand(e, 1000), ExpansionOverflowError);
  EXPECT_NO_THROW(Expand(Expr::Product({s, s, s}), 24));
  EXPECT_THROW(Expand(Expr::Product({s, s, s}), 23), ExpansionOverflowError);
}

TEST(ExprTest, CollectLabels) {
  Expr e = Expr::Product({L('c', 2), Expr::Sum({L('a', 1), L('c', 2)})});
  EXPECT_EQ(CollectLabels(e), (std::vector<EdgeLabel>{Label(Series::kA, 1), Label(Series::kC, 2)}));
}

}  // namespace
}  // namespace rhomboid
