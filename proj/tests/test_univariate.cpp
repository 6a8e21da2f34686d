#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "generators.hpp"
#include "oracles.hpp"
#include "tropical/error.hpp"
#include "tropical/essential.hpp"
#include "tropical/syntax.hpp"
#include "tropical/univariate.hpp"

using namespace tropical;
using namespace tropical::testing;

namespace {

Polynomial P(const char* s, std::size_t arity = 1) {
  ParseOptions o;
  o.arity_hint = arity;
  return parse_poly(s, o);
}

TropicalNumber t(long n) { return TropicalNumber::tangible(n); }

std::vector<std::string> factor_texts(const Factorization& fz) {
  std::vector<std::string> out;
  for (const auto& f : fz.factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) out.push_back(format_poly(f.poly));
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Univariate, FindRoot) {
  auto r = find_root(P("x+1"));
  EXPECT_EQ(r, std::vector<TropicalNumber>{t(1)});
  EXPECT_TRUE(is_root(P("x+1"), r));
  EXPECT_TRUE(is_root(P("2v*x^2+1v", 1), find_root(P("2v*x^2+1v"))));
  EXPECT_EQ(code_of([] { find_root(P("3")); }), ErrorCode::ConstantTangibleInput);
  auto p = find_root(P("x*y+y^2+4", 2));
  EXPECT_TRUE(is_root(P("x*y+y^2+4", 2), p));
}

TEST(Univariate, FactorTangibleFull) {
  auto fz = factor_tangible_full(P("2*x^4+5*x^3+5*x^2+3*x+0"));
  EXPECT_EQ(fz.unit, t(2));
  EXPECT_EQ(factor_texts(fz), (std::vector<std::string>{"x + 3", "x + 0", "x + -2", "x + -3"}));
  EXPECT_TRUE(fz.certified);
  EXPECT_EQ(fz.expand(), full_closure(P("2*x^4+5*x^3+5*x^2+3*x+0")));

  fz = factor_tangible_full(P("x^2+2"));
  EXPECT_EQ(factor_texts(fz), (std::vector<std::string>{"x + 1", "x + 1"}));
  EXPECT_EQ(poly_mul(P("x+1"), P("x+1")), P("x^2+1v*x+2"));

  fz = factor_tangible_full(P("x+5"));
  EXPECT_EQ(fz.unit, t(0));
  EXPECT_EQ(factor_texts(fz), std::vector<std::string>{"x + 5"});

  fz = factor_tangible_full(P("x^3+1*x^2"));
  EXPECT_EQ(factor_texts(fz), (std::vector<std::string>{"x + 1", "x", "x"}));

  EXPECT_EQ(code_of([] { factor_tangible_full(P("x^2+2v")); }), ErrorCode::NotTangibleFull);
}

TEST(Univariate, QuadraticSplitCase) {
  // α₁ above √α₀: (x ⊕ α₁)(x ⊕ α₀/α₁).
  auto fz = factor_tangible_full(P("x^2+3*x+1"));
  EXPECT_EQ(factor_texts(fz), (std::vector<std::string>{"x + 3", "x + -2"}));
}

TEST(Univariate, FactorFull) {
  auto fz = factor_full(P("x^2+2v"));
  EXPECT_EQ(factor_texts(fz), (std::vector<std::string>{"x + 1", "x + 1v"}));

  fz = factor_full(P("x^2+2v*x+3"));
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_EQ(fz.factors[0].kind, FactorKind::IrreducibleQuadratic);
  EXPECT_EQ(fz.factors[0].poly, P("x^2+2v*x+3"));

  fz = factor_full(P("0v*x^2+2v*x+3"));
  EXPECT_EQ(factor_texts(fz), (std::vector<std::string>{"x + 2", "0v*x + 1"}));
  EXPECT_EQ(fz.expand(), red_mul(P("0v*x+2"), P("0v*x+1")));

  fz = factor_full(P("3v*x^2"));
  EXPECT_EQ(fz.unit, TropicalNumber::ghost(3));
  EXPECT_EQ(factor_texts(fz), (std::vector<std::string>{"x", "x"}));
}

TEST(Univariate, RootsWithMultiplicity) {
  using R = std::vector<std::pair<TropicalNumber, unsigned>>;
  EXPECT_EQ(roots_with_multiplicity(P("2*x^4+5*x^3+5*x^2+3*x+0")),
            (R{{t(3), 1}, {t(0), 1}, {t(-2), 1}, {t(-3), 1}}));
  EXPECT_EQ(roots_with_multiplicity(P("x^2+1v*x+2")), (R{{t(1), 2}}));
  EXPECT_EQ(roots_with_multiplicity(P("x+5")), (R{{t(5), 1}}));
}

TEST(Univariate, CommonRoot) {
  auto r = common_root({P("x+1"), P("x+5")});
  EXPECT_EQ(r, std::vector<TropicalNumber>{TropicalNumber::ghost(5)});
  EXPECT_EQ(code_of([] { common_root({P("x+1"), P("3")}); }), ErrorCode::ConstantTangibleAmongInputs);
  EXPECT_EQ(common_root({P("2v*x+1v")}), std::vector<TropicalNumber>{t(0)});
  EXPECT_EQ(code_of([] { common_root({P("x"), P("x", 2)}); }), ErrorCode::ArityMismatch);
}

TEST(Univariate, SemitangibleSplitIsCertifiedOrRejected) {
  for (const char* s : {"x^3+3v*x^2+5v*x+6", "x^4+2v*x^3+4v*x^2+5v*x+5", "x^2+1v*x+0"}) {
    Polynomial f = P(s);
    try {
      auto [a, b] = semitangible_split(f);
      EXPECT_EQ(red_mul(a, b), full_closure(f)) << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InternalInconsistency) << s;
    }
  }
  EXPECT_EQ(code_of([] { semitangible_split(P("x^2+3*x+1")); }), ErrorCode::InvalidArgument);
}

TEST(UnivariateProperty, FactorizationMatchesConstructionAndPeeling) {
  Gen gen(41);
  for (int i = 0; i < 500; ++i) {
    TangibleFull tf = random_tangible_full(gen, 8);
    auto fz = factor_tangible_full(tf.poly);
    ASSERT_TRUE(fz.certified);
    EXPECT_EQ(fz.expand(), tf.poly);
    EXPECT_EQ(fz.unit, TropicalNumber::tangible(tf.lead));

    std::vector<Rational> roots;
    unsigned lower = 0;
    for (const auto& f : fz.factors) {
      for (unsigned m = 0; m < f.multiplicity; ++m) {
        if (f.key) {
          roots.push_back(*f.key);
        } else {
          ++lower;
        }
      }
    }
    EXPECT_EQ(roots, tf.roots);
    EXPECT_EQ(lower, tf.lower);

    Peeled p = peel(tf.poly);
    EXPECT_EQ(p.roots, tf.roots);
    EXPECT_EQ(p.lower, tf.lower);

    auto again = factor_tangible_full(fz.expand());
    EXPECT_EQ(factor_texts(again), factor_texts(fz));
  }
}

TEST(UnivariateProperty, RootsAreCornersOfTheProjection) {
  Gen gen(42);
  for (int i = 0; i < 300; ++i) {
    TangibleFull tf = random_tangible_full(gen, 6);
    Polynomial proj = project_poly(tf.poly);
    for (const auto& [r, m] : roots_with_multiplicity(tf.poly)) {
      EXPECT_TRUE(is_root(tf.poly, {r}));
      EXPECT_TRUE(is_root(proj, {r}));
    }
  }
}

TEST(UnivariateProperty, FactorFullIsCertifiedAndCanonical) {
  Gen gen(43);
  for (int i = 0; i < 500; ++i) {
    Polynomial f = gen.polynomial(1, 8, 6, 0.5);
    auto fz = factor_full(f);
    EXPECT_TRUE(fz.certified);
    EXPECT_EQ(fz.expand(), full_closure(f)) << format_poly(f);
    auto count = [&](FactorKind k) {
      unsigned n = 0;
      for (const auto& x : fz.factors) n += x.kind == k ? x.multiplicity : 0;
      return n;
    };
    EXPECT_LE(count(FactorKind::GhostVariableLinear), 1u);
    EXPECT_LE(count(FactorKind::GhostConstantLinear), 1u);
    EXPECT_EQ(factor_texts(factor_full(fz.expand())), factor_texts(fz));
  }
}

TEST(UnivariateProperty, FindRootAlwaysFindsARoot) {
  Gen gen(44);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    Polynomial f = gen.nonconstant_polynomial(n, 5, 5);
    auto r = find_root(f);
    EXPECT_TRUE(root_oracle(f, r)) << format_poly(f);
  }
}

TEST(UnivariateProperty, CommonRootIsARootOfEveryInput) {
  Gen gen(45);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Polynomial> fs;
    for (int k = gen.integer(1, 4); k > 0; --k) fs.push_back(gen.nonconstant_polynomial(n, 4, 4));
    auto r = common_root(fs);
    for (const auto& f : fs) EXPECT_TRUE(root_oracle(f, r)) << format_poly(f);
  }
}
