#include <gtest/gtest.h>

#include "generators.hpp"
#include "tropical/error.hpp"
#include "tropical/number.hpp"

using namespace tropical;
using tropical::testing::Gen;

namespace {

TropicalNumber t(long n, long d = 1) { return TropicalNumber::tangible(Rational(n, d)); }
TropicalNumber g(long n, long d = 1) { return TropicalNumber::ghost(Rational(n, d)); }
const TropicalNumber ninf = TropicalNumber::neg_inf();

}  // namespace

TEST(Number, AdditionPicksLargerAndGhostsTies) {
  EXPECT_EQ(trop_add(t(2), t(3)), t(3));
  EXPECT_EQ(trop_add(t(3), t(3)), g(3));
  EXPECT_EQ(trop_add(g(3), t(3)), g(3));
  EXPECT_EQ(trop_add(g(2), t(3)), t(3));
  EXPECT_EQ(trop_add(g(4), t(3)), g(4));
  EXPECT_EQ(trop_add(ninf, t(-7)), t(-7));
  EXPECT_EQ(trop_add(ninf, ninf), ninf);
}

TEST(Number, MultiplicationAddsAndPropagatesGhost) {
  EXPECT_EQ(trop_mul(t(2), t(3)), t(5));
  EXPECT_EQ(trop_mul(g(2), t(3)), g(5));
  EXPECT_EQ(trop_mul(g(2), g(3)), g(5));
  EXPECT_EQ(trop_mul(ninf, g(3)), ninf);
  EXPECT_EQ(trop_mul(t(1, 2), t(1, 3)), t(5, 6));
}

TEST(Number, InverseAndDivision) {
  EXPECT_EQ(trop_inv(t(3)), t(-3));
  EXPECT_EQ(trop_inv(g(3)), g(-3));
  EXPECT_EQ(trop_div(t(5), t(2)), t(3));
  try {
    trop_inv(ninf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InversionOfNegInfinity);
  }
}

TEST(Number, PowersAndRoots) {
  EXPECT_EQ(trop_pow(t(3), 4), t(12));
  EXPECT_EQ(trop_pow(g(3), 2), g(6));
  EXPECT_EQ(trop_pow(ninf, 3), ninf);
  EXPECT_EQ(trop_pow(t(3), 0), t(0));
  EXPECT_EQ(trop_root(t(5), 2), t(5, 2));
  EXPECT_EQ(trop_root(g(6), 3), g(2));
  try {
    trop_root(ninf, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RootOfNegInfinity);
  }
}

TEST(Number, OrderComparesValueThenTag) {
  EXPECT_TRUE(compare(t(2), t(3)) < 0);
  EXPECT_TRUE(compare(t(3), g(3)) < 0);
  EXPECT_TRUE(compare(g(2), t(3)) < 0);
  EXPECT_TRUE(compare(ninf, t(-100)) < 0);
  EXPECT_TRUE(compare(ninf, ninf) == 0);
}

TEST(Number, GhostMapAndProjection) {
  EXPECT_EQ(ghost_of(t(4)), g(4));
  EXPECT_EQ(ghost_of(g(4)), g(4));
  EXPECT_EQ(ghost_of(ninf), ninf);
  EXPECT_EQ(project(g(4)), Rational(4));
  EXPECT_FALSE(project(ninf).has_value());
}

TEST(Number, TextRoundTrip) {
  EXPECT_EQ(t(3).to_string(), "3");
  EXPECT_EQ(t(-5, 2).to_string(), "-5/2");
  EXPECT_EQ(g(3).to_string(), "3v");
  EXPECT_EQ(ninf.to_string(), "-inf");
  EXPECT_EQ(*parse_number("1.25"), t(5, 4));
  EXPECT_EQ(*parse_number("-5/2v"), g(-5, 2));
  EXPECT_EQ(*parse_number("-inf"), ninf);
  EXPECT_FALSE(parse_number("abc").has_value());
  EXPECT_FALSE(parse_number("1/0").has_value());
  Gen gen(7);
  for (int i = 0; i < 500; ++i) {
    TropicalNumber a = gen.number();
    EXPECT_EQ(*parse_number(a.to_string()), a);
  }
}

TEST(NumberProperty, SemiringAxioms) {
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    TropicalNumber a = gen.number(), b = gen.number(), c = gen.number();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + ninf, a);
    EXPECT_EQ(a * TropicalNumber::zero(), a);
    EXPECT_EQ(a * ninf, ninf);
  }
}

TEST(NumberProperty, GhostIsAnIdealAndSumsOfEqualsAreGhost) {
  Gen gen(12);
  for (int i = 0; i < 1000; ++i) {
    TropicalNumber a = gen.number(), b = gen.number();
    if (!b.is_neg_inf()) EXPECT_FALSE((ghost_of(b) * a).is_tangible());
    EXPECT_EQ(a + a, ghost_of(a));
    EXPECT_EQ(ghost_of(a + b), ghost_of(a) + ghost_of(b));
    EXPECT_EQ(ghost_of(a * b), ghost_of(a) * b);
  }
}

TEST(NumberProperty, FrobeniusOnElements) {
  Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    TropicalNumber a = gen.number(), b = gen.number();
    for (unsigned k = 2; k <= 4; ++k) EXPECT_EQ(trop_pow(a + b, k), trop_pow(a, k) + trop_pow(b, k));
  }
}

TEST(NumberProperty, ProjectionIsAHomomorphism) {
  Gen gen(14);
  for (int i = 0; i < 1000; ++i) {
    TropicalNumber a = gen.number(), b = gen.number();
    ExtendedReal pa = project(a), pb = project(b);
    ExtendedReal sum = compare_extended(pa, pb) >= 0 ? pa : pb;
    EXPECT_EQ(project(a + b), sum);
    EXPECT_EQ(project(a * b), add_extended(pa, pb));
  }
}

TEST(NumberProperty, SumIsOneOfItsArguments) {
  Gen gen(15);
  for (int i = 0; i < 1000; ++i) {
    TropicalNumber a = gen.number(), b = gen.number(), s = a + b;
    EXPECT_TRUE(s == a || s == b || s == ghost_of(a));
    EXPECT_TRUE(compare(s, a) >= 0 && compare(s, b) >= 0);
  }
}

TEST(NumberProperty, AdditionIsNotIdempotentOnTangibles) {
  Gen gen(16);
  for (int i = 0; i < 200; ++i) {
    TropicalNumber a = gen.tangible();
    EXPECT_NE(a + a, a);
  }
}
