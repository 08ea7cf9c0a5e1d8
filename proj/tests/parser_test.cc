#include <gtest/gtest.h>

#include <random>

#include "rhomboid/errors.h"
#include "rhomboid/expression.h"
#include "rhomboid/vdm.h"

namespace rhomboid {
namespace {

Expr RandomExpr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 5);
  switch (kind(rng)) {
    case 0:
      return rng() % 8 == 0 ? Expr::One() : Expr::Literal(Label(Series('a' + rng() % 7), rng() % 30));
    case 1:
      return Expr::Literal(Label(Series('a' + rng() % 7), 1 + rng() % 30));
    default: {
      std::vector<Expr> children(2 + rng() % 3);
      for (Expr& c : children) c = RandomExpr(rng, depth - 1);
      return rng() % 2 ? Expr::Sum(std::move(children)) : Expr::Product(std::move(children));
    }
  }
}

TEST(ParserTest, Basic) {
  EXPECT_EQ(Render(Parse("a*(b+c)")), "a*(b+c)");
  EXPECT_EQ(Render(Parse("  e12 * ( c1+ g1 )  ")), "e12*(c1+g1)");
  EXPECT_EQ(Render(Parse("((a))")), "a");
  EXPECT_EQ(Render(Parse("a+(b+c)")), "a+b+c");
  EXPECT_EQ(Render(Parse("1*a")), "a");
  EXPECT_TRUE(Parse("1").is_one());
}

TEST(ParserTest, Errors) {
  for (const char* bad : {"", "a+", "(a", "a)", "a**b", "h1", "a0", "a b", "+a", "x", "a1+()"}) {
    EXPECT_THROW(Parse(bad), ParseError) << bad;
  }
  try {
    Parse("a+b*h");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ParserTest, RandomRoundTrip) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    Expr e = RandomExpr(rng, 1 + i % 5);
    ASSERT_TRUE(IsNormalized(e));
    std::string text = Render(e);
    Expr back = Parse(text);
    ASSERT_EQ(back, e) << text;
    ASSERT_EQ(Render(back), text);
  }
}

TEST(ParserTest, GeneratedRoundTrip) {
  for (Method m : kAllMethods) {
    for (Family fam : {Family::kFsr, Family::kSr}) {
      for (Shape s : kAllShapes) {
        for (int n = 1; n <= 10; ++n) {
          Expr e = Generate(SubgraphSpec::Canonical(fam, s, n), m);
          ASSERT_EQ(Parse(Render(e)), e) << MethodName(m) << ' ' << ShapeName(s) << ' ' << n;
        }
      }
    }
  }
}

}  // namespace
}  // namespace rhomboid
