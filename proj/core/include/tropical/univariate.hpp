#pragma once

#include <utility>
#include <vector>

#include "tropical/polynomial.hpp"

namespace tropical {

enum class FactorKind {
  TangibleLinear,         // x ⊕ a, or x itself when a = -inf
  GhostVariableLinear,    // x^ν ⊕ a
  GhostConstantLinear,    // x ⊕ b^ν
  IrreducibleQuadratic,   // x² ⊕ a^ν x ⊕ b
  SemitangibleBlock,
};

const char* to_string(FactorKind k);

struct Factor {
  FactorKind kind = FactorKind::TangibleLinear;
  Polynomial poly{1};
  unsigned multiplicity = 1;
  /// The corner value that identifies the factor (its root for linear factors,
  /// the upper corner for quadratics); -inf for the factor x.
  ExtendedReal key;
};

struct Factorization {
  TropicalNumber unit;
  std::vector<Factor> factors;  // descending key order
  bool certified = false;

  /// unit ⊙ ∏ factors in the reduced semiring.
  Polynomial expand() const;
};

/// A point at which f evaluates into the ghost ideal.
std::vector<TropicalNumber> find_root(const Polynomial& f);

Factorization factor_tangible_full(const Polynomial& f);
Factorization factor_full(const Polynomial& f);

std::vector<std::pair<TropicalNumber, unsigned>> roots_with_multiplicity(const Polynomial& f);

/// A common root of every polynomial in fs.
std::vector<TropicalNumber> common_root(const std::vector<Polynomial>& fs);

/// Splits a monic semitangible-full polynomial as (x² ⊕ α_{t-1}x ⊕ β_{t-1}) · g with
/// β_i = π(α_{t-1} / α_i). The split is checked by expansion and rejected with
/// InternalInconsistency when the product differs.
std::pair<Polynomial, Polynomial> semitangible_split(const Polynomial& f);

}  // namespace tropical
