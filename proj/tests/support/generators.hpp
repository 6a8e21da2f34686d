#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropical/polynomial.hpp"

namespace tropical::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  int integer(int lo, int hi);
  bool coin(double p = 0.5);

  /// k/d with d in [1, max_den] and |k/d| <= range.
  Rational rational(int range = 8, int max_den = 3);
  TropicalNumber tangible(int range = 8) { return TropicalNumber::tangible(rational(range)); }
  /// Tangible, ghost or -inf, each with positive probability.
  TropicalNumber number(int range = 8);
  TropicalNumber non_neg_inf(int range = 8);

  Exponent exponent(std::size_t arity, unsigned max_degree);
  Polynomial polynomial(std::size_t arity, unsigned max_degree, std::size_t max_terms,
                        double ghost_prob = 0.3);
  Polynomial nonconstant_polynomial(std::size_t arity, unsigned max_degree, std::size_t max_terms,
                                    double ghost_prob = 0.3);
  std::vector<TropicalNumber> point(std::size_t arity, double neg_inf_prob = 0.1);

 private:
  std::mt19937_64 rng_;
};

/// A tangible-full univariate polynomial built from its roots.
struct TangibleFull {
  Polynomial poly{1};
  Rational lead;
  std::vector<Rational> roots;  // descending, with repetition
  unsigned lower = 0;           // multiplicity of the factor x
};

/// Random lead, roots and lower degree with total degree in [1, max_degree].
TangibleFull random_tangible_full(Gen& gen, unsigned max_degree);

/// At least `count` points covering every tangible/ghost coordinate pattern, plus points
/// with -inf coordinates.
std::vector<std::vector<TropicalNumber>> pattern_points(Gen& gen, std::size_t arity, std::size_t count);

/// Tangible and ghost copies of lo, lo + 1/per_unit, ..., hi, followed by -inf.
std::vector<TropicalNumber> dense_line(const Rational& lo, const Rational& hi, unsigned per_unit);

}  // namespace tropical::testing
