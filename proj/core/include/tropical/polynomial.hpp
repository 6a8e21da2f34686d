#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropical/number.hpp"

namespace tropical {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded-lex descending: higher total degree first, ties broken lexicographically
/// with larger leading exponents first.
struct GradedLexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over the extended tropical semiring. Coefficients are never -inf;
/// the empty term map is the polynomial -inf.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, TropicalNumber, GradedLexDescending>;

  explicit Polynomial(std::size_t arity = 1);

  static Polynomial neg_inf(std::size_t arity) { return Polynomial(arity); }
  static Polynomial constant(std::size_t arity, const TropicalNumber& c);
  static Polynomial monomial(const Exponent& e, const TropicalNumber& c);
  /// x_i with coefficient 0.
  static Polynomial variable(std::size_t arity, std::size_t index);
  /// Univariate convenience: coefficient list indexed by degree, -inf entries skipped.
  static Polynomial univariate(const std::vector<TropicalNumber>& coeffs_by_degree);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_neg_inf() const noexcept { return terms_.empty(); }

  /// Combines with any existing term at e by ⊕. Adding -inf is a no-op.
  void add_term(const Exponent& e, const TropicalNumber& c);
  /// Overwrites the term at e; -inf erases it.
  void set_term(const Exponent& e, const TropicalNumber& c);
  TropicalNumber coeff(const Exponent& e) const;

  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_tangible() const;
  /// Every coefficient ghost. The polynomial -inf counts as ghost.
  bool is_ghost() const;

  /// Leading term in graded-lex order. Requires a nonempty polynomial.
  const std::pair<const Exponent, TropicalNumber>& leading() const;

  bool operator==(const Polynomial& other) const;

 private:
  std::size_t arity_;
  TermMap terms_;
};

struct DegreeBounds {
  std::optional<unsigned> deg;
  std::optional<unsigned> lower_deg;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_pow(const Polynomial& f, unsigned k);
Polynomial poly_scale(const Polynomial& f, const TropicalNumber& c);

TropicalNumber evaluate(const Polynomial& f, const std::vector<TropicalNumber>& point);
bool is_root(const Polynomial& f, const std::vector<TropicalNumber>& point);
DegreeBounds degree_bounds(const Polynomial& f);

/// Returns (tangible part, ghost part).
std::pair<Polynomial, Polynomial> tg_decompose(const Polynomial& f);
/// Returns (f_r, f_u): projection of all terms, projection of the ghost terms.
std::pair<Polynomial, Polynomial> ru_decompose(const Polynomial& f);

/// Projection of every coefficient to its tangible value.
Polynomial project_poly(const Polynomial& f);
/// Every coefficient replaced by its ghost.
Polynomial ghost_poly(const Polynomial& f);

/// ⊕ over the terms raised individually to the k-th power.
Polynomial termwise_pow(const Polynomial& f, unsigned k);

/// Univariate helpers. Degree of the single variable of a term.
inline unsigned udeg(const Exponent& e) { return e.at(0); }

}  // namespace tropical
