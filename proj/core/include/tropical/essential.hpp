#pragma once

#include <optional>
#include <vector>

#include "tropical/polynomial.hpp"

namespace tropical {

enum class TermClass { Essential, QuasiEssential, Inessential };

const char* to_string(TermClass c);

struct LiftedTerm {
  Exponent exp;
  TropicalNumber coeff;
  Rational height;  // projected coefficient
  TermClass cls = TermClass::Inessential;
  /// Essential, yet its exponent is not a vertex of the Newton polytope.
  bool interior_vertex = false;
};

struct HullPoint {
  Exponent exp;
  Rational height;
  bool vertex = false;
};

struct EssentialComplex {
  std::size_t arity = 1;
  std::vector<LiftedTerm> terms;  // graded-lex descending, one per term of f
  std::vector<HullPoint> hull_lattice_points;
  /// Cells of the induced subdivision, each listing the exponents of the terms on one
  /// upper face. Absent for arity >= 3.
  std::optional<std::vector<std::vector<Exponent>>> subdivision;
};

struct SlopeSequence {
  std::vector<Rational> slopes;                            // weakly descending
  std::vector<std::pair<unsigned, unsigned>> edges;        // (upper degree, lower degree)
};

EssentialComplex classify_monomials(const Polynomial& f);
Polynomial essential_part(const Polynomial& f);
Polynomial full_closure(const Polynomial& f);
bool is_full(const Polynomial& f);
bool equivalent(const Polynomial& f, const Polynomial& g);

Polynomial red_add(const Polynomial& f, const Polynomial& g);
Polynomial red_mul(const Polynomial& f, const Polynomial& g);
Polynomial red_pow(const Polynomial& f, unsigned k);

/// Univariate. Returns q with red_mul(q, g) == full_closure(f), or nullopt.
std::optional<Polynomial> divides(const Polynomial& g, const Polynomial& f);

SlopeSequence slope_sequence(const Polynomial& f);

/// Univariate corner data of a full polynomial: each corner value with its
/// multiplicity, descending. Lower degree appears as a corner at -inf.
struct Corner {
  ExtendedReal value;
  unsigned multiplicity = 0;
};
std::vector<Corner> corners(const Polynomial& f);

}  // namespace tropical
