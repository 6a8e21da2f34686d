#include <gtest/gtest.h>

#include "generators.hpp"
#include "tropical/lp.hpp"

using namespace tropical;
using tropical::testing::Gen;

namespace {

using Matrix = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

}  // namespace

TEST(Lp, Optimal) {
  // max x + y with x + s1 = 2, y + s2 = 3.
  auto r = lp::maximize(Matrix{{1, 0, 1, 0}, {0, 1, 0, 1}}, Vec{2, 3}, Vec{1, 1, 0, 0});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.x[0], 2);
  EXPECT_EQ(r.x[1], 3);
}

TEST(Lp, InfeasibleAndUnbounded) {
  EXPECT_EQ(lp::maximize(Matrix{{1, 1}}, Vec{-1}, Vec{1, 0}).status, lp::Status::Infeasible);
  EXPECT_EQ(lp::maximize(Matrix{{1, -1}}, Vec{0}, Vec{1, 0}).status, lp::Status::Unbounded);
}

TEST(Lp, DegenerateProblemTerminates) {
  Matrix A{{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 0, 0}};
  auto r = lp::maximize(A, Vec{1, 1, 1}, Vec{1, 1, 0, 0});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, 1);
}

TEST(Lp, HullHeight) {
  Matrix pts{{0}, {2}};
  auto r = lp::hull_height(pts, Vec{0, 4}, Vec{1});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(lp::hull_height(pts, Vec{0, 4}, Vec{3}).status, lp::Status::Infeasible);
  EXPECT_TRUE(lp::in_convex_hull(Matrix{{0, 0}, {2, 0}, {0, 2}}, Vec{1, 1}));
  EXPECT_FALSE(lp::in_convex_hull(Matrix{{0, 0}, {2, 0}, {0, 2}}, Vec{2, 1}));
}

TEST(LpProperty, UnivariateHullHeightMatchesPairwiseInterpolation) {
  Gen gen(91);
  for (int i = 0; i < 300; ++i) {
    Matrix pts;
    Vec h;
    for (int k = gen.integer(2, 6); k > 0; --k) {
      pts.push_back({Rational(gen.integer(0, 8))});
      h.push_back(gen.rational());
    }
    Rational target(gen.integer(0, 8));
    // Upper hull at target: best chord between a point on each side.
    std::optional<Rational> best;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = 0; b < pts.size(); ++b) {
        const Rational &xa = pts[a][0], &xb = pts[b][0];
        if (xa > target || xb < target) continue;
        Rational v = xa == xb ? std::max(h[a], h[b]) : h[a] + (h[b] - h[a]) * (target - xa) / (xb - xa);
        if (!best || v > *best) best = v;
      }
    }
    auto r = lp::hull_height(pts, h, Vec{target});
    if (best) {
      ASSERT_EQ(r.status, lp::Status::Optimal);
      EXPECT_EQ(r.value, *best);
    } else {
      EXPECT_EQ(r.status, lp::Status::Infeasible);
    }
  }
}
