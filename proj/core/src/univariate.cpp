#include "tropical/univariate.hpp"

#include <algorithm>

#include "tropical/error.hpp"
#include "tropical/essential.hpp"

namespace tropical {

const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::TangibleLinear: return "tangible-linear";
    case FactorKind::GhostVariableLinear: return "ghost-variable-linear";
    case FactorKind::GhostConstantLinear: return "ghost-constant-linear";
    case FactorKind::IrreducibleQuadratic: return "irreducible-quadratic";
    case FactorKind::SemitangibleBlock: return "semitangible-block";
  }
  return "";
}

namespace {

void require_univariate(const Polynomial& f, const char* what) {
  if (f.arity() != 1) {
    throw Error(ErrorCode::ArityUnsupported,
                std::string(what) + " needs a univariate polynomial, got arity " +
                    std::to_string(f.arity()));
  }
  if (f.is_neg_inf()) throw Error(ErrorCode::EmptyPolynomial, std::string(what) + " of -inf");
}

TropicalNumber t(const Rational& v) { return TropicalNumber::tangible(v); }
TropicalNumber g(const Rational& v) { return TropicalNumber::ghost(v); }

Factor linear(const ExtendedReal& a, unsigned mult) {
  Factor f;
  f.kind = FactorKind::TangibleLinear;
  f.poly = Polynomial::univariate({a ? t(*a) : TropicalNumber::neg_inf(), TropicalNumber::zero()});
  f.multiplicity = mult;
  f.key = a;
  return f;
}

struct UVertex {
  unsigned deg;
  TropicalNumber coeff;
};

// Vertices of the essential part, descending degree.
std::vector<UVertex> vertices_desc(const Polynomial& full) {
  std::vector<UVertex> out;
  const Polynomial fe = essential_part(full);
  for (const auto& [e, c] : fe.terms()) out.push_back({e[0], c});
  return out;  // graded-lex order is descending degree in one variable
}

void certify(Factorization& fz, const Polynomial& full) {
  std::stable_sort(fz.factors.begin(), fz.factors.end(), [](const Factor& a, const Factor& b) {
    auto c = compare_extended(a.key, b.key);
    if (c != 0) return c > 0;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  if (fz.expand() != full) {
    throw Error(ErrorCode::InternalInconsistency, "factorization does not expand to its input");
  }
  fz.certified = true;
}

// Finite corners c_1..c_k between consecutive vertices (descending), multiplicities, and the
// lower degree.
struct CornerData {
  std::vector<Rational> value;  // value[i] sits between vertex i and vertex i+1
  std::vector<unsigned> mult;
  unsigned lower = 0;
};

CornerData corner_data(const std::vector<UVertex>& v) {
  CornerData cd;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    unsigned m = v[i].deg - v[i + 1].deg;
    cd.value.push_back((v[i + 1].coeff.value() - v[i].coeff.value()) / m);
    cd.mult.push_back(m);
  }
  cd.lower = v.back().deg;
  return cd;
}

}  // namespace

Polynomial Factorization::expand() const {
  Polynomial out = Polynomial::constant(1, unit);
  for (const auto& f : factors) out = red_mul(out, red_pow(f.poly, f.multiplicity));
  return out;
}

Factorization factor_tangible_full(const Polynomial& f) {
  require_univariate(f, "factorization");
  Polynomial full = full_closure(f);
  auto verts = vertices_desc(full);
  for (const auto& v : verts) {
    if (!v.coeff.is_tangible()) {
      throw Error(ErrorCode::NotTangibleFull, "essential part has a ghost coefficient");
    }
  }
  Factorization fz;
  fz.unit = t(verts.front().coeff.value());
  auto cd = corner_data(verts);
  for (std::size_t i = 0; i < cd.value.size(); ++i) fz.factors.push_back(linear(cd.value[i], cd.mult[i]));
  if (cd.lower > 0) fz.factors.push_back(linear(std::nullopt, cd.lower));
  certify(fz, full);
  return fz;
}

Factorization factor_full(const Polynomial& f) {
  require_univariate(f, "factorization");
  Polynomial full = full_closure(f);
  auto verts = vertices_desc(full);
  auto cd = corner_data(verts);
  const std::size_t k = verts.size() - 1;

  Factorization fz;
  auto first_tangible = std::find_if(verts.begin(), verts.end(),
                                     [](const UVertex& v) { return v.coeff.is_tangible(); });
  if (first_tangible == verts.end()) {
    fz.unit = g(verts.front().coeff.value());
  } else {
    fz.unit = t(verts.front().coeff.value());
    const std::size_t r = static_cast<std::size_t>(first_tangible - verts.begin());
    std::size_t s = k;
    while (!verts[s].coeff.is_tangible()) --s;

    if (r > 0) {
      const Rational& a = cd.value[r - 1];
      --cd.mult[r - 1];
      Factor fac;
      fac.kind = FactorKind::GhostVariableLinear;
      fac.poly = Polynomial::univariate({t(a), g(0)});
      fac.key = a;
      fz.factors.push_back(fac);
    }
    if (s < k) {
      const Rational& b = cd.value[s];
      --cd.mult[s];
      Factor fac;
      fac.kind = FactorKind::GhostConstantLinear;
      fac.poly = Polynomial::univariate({g(b), TropicalNumber::zero()});
      fac.key = b;
      fz.factors.push_back(fac);
    }
    // Ghost runs strictly between tangible vertices become irreducible quadratics.
    std::size_t i = r;
    while (i < s) {
      if (verts[i + 1].coeff.is_tangible()) {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (!verts[j].coeff.is_tangible()) ++j;
      const Rational& hi = cd.value[i];
      const Rational& lo = cd.value[j - 1];
      --cd.mult[i];
      --cd.mult[j - 1];
      Factor fac;
      fac.kind = FactorKind::IrreducibleQuadratic;
      fac.poly = Polynomial::univariate({t(hi + lo), g(hi), TropicalNumber::zero()});
      fac.key = hi;
      fz.factors.push_back(fac);
      i = j;
    }
  }
  for (std::size_t i = 0; i < cd.value.size(); ++i) {
    if (cd.mult[i] > 0) fz.factors.push_back(linear(cd.value[i], cd.mult[i]));
  }
  if (cd.lower > 0) fz.factors.push_back(linear(std::nullopt, cd.lower));

  // Merge repeated identical factors.
  std::vector<Factor> merged;
  for (const auto& fac : fz.factors) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Factor& m) { return m.poly == fac.poly; });
    if (it == merged.end()) {
      merged.push_back(fac);
    } else {
      it->multiplicity += fac.multiplicity;
    }
  }
  fz.factors = std::move(merged);
  certify(fz, full);
  return fz;
}

std::vector<std::pair<TropicalNumber, unsigned>> roots_with_multiplicity(const Polynomial& f) {
  std::vector<std::pair<TropicalNumber, unsigned>> out;
  for (const auto& fac : factor_tangible_full(f).factors) {
    out.emplace_back(fac.key ? t(*fac.key) : TropicalNumber::neg_inf(), fac.multiplicity);
  }
  return out;
}

namespace {

// Root of a nonconstant univariate polynomial.
TropicalNumber univariate_root(const Polynomial& f) {
  if (f.is_ghost()) return TropicalNumber::zero();
  TropicalNumber a0 = f.coeff({0});
  if (a0.is_neg_inf()) return g(0);
  if (a0.is_ghost()) return g(a0.value());
  std::optional<Rational> r;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] == 0) continue;
    Rational cand = (a0.value() - c.value()) / e[0];
    if (!r || cand < *r) r = cand;
  }
  return t(*r);
}

}  // namespace

std::vector<TropicalNumber> find_root(const Polynomial& f) {
  const std::size_t n = f.arity();
  std::vector<TropicalNumber> zeros(n, TropicalNumber::zero());
  if (f.is_neg_inf() || f.is_ghost()) return zeros;
  if (f.is_constant()) {
    throw Error(ErrorCode::ConstantTangibleInput, "a tangible constant has no root");
  }
  if (n == 1) return {univariate_root(f)};

  // Fix all but one occurring variable to 0 and solve in the remaining one.
  std::size_t var = 0;
  for (; var < n; ++var) {
    bool occurs = std::any_of(f.terms().begin(), f.terms().end(),
                              [&](const auto& term) { return term.first[var] > 0; });
    if (occurs) break;
  }
  Polynomial restricted(1);
  for (const auto& [e, c] : f.terms()) restricted.add_term({e[var]}, c);
  auto point = zeros;
  point[var] = univariate_root(restricted);
  return point;
}

std::vector<TropicalNumber> common_root(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "common root of an empty family");
  const std::size_t n = fs.front().arity();
  for (const auto& f : fs) {
    if (f.arity() != n) throw Error(ErrorCode::ArityMismatch, "family has mixed arities");
    if (!f.is_neg_inf() && f.is_constant() && f.is_tangible()) {
      throw Error(ErrorCode::ConstantTangibleAmongInputs, "a tangible constant never vanishes");
    }
  }
  bool all_ghost = std::all_of(fs.begin(), fs.end(), [](const Polynomial& f) { return f.is_ghost(); });
  if (all_ghost) return std::vector<TropicalNumber>(n, TropicalNumber::zero());

  // At the diagonal ghost point (R^ν,…,R^ν) every nonconstant term is ghost, so f vanishes
  // once some nonconstant term reaches the tangible constant term.
  std::optional<Rational> R;
  for (const auto& f : fs) {
    TropicalNumber a0 = f.coeff(Exponent(n, 0));
    if (!a0.is_tangible()) continue;
    std::optional<Rational> ri;
    for (const auto& [e, c] : f.terms()) {
      unsigned d = total_degree(e);
      if (d == 0) continue;
      Rational cand = (a0.value() - c.value()) / d;
      if (!ri || cand < *ri) ri = cand;
    }
    if (!R || *ri > *R) R = ri;
  }
  return std::vector<TropicalNumber>(n, g(R ? *R : Rational(0)));
}

std::pair<Polynomial, Polynomial> semitangible_split(const Polynomial& f) {
  require_univariate(f, "semitangible split");
  Polynomial full = full_closure(f);
  auto b = degree_bounds(full);
  const unsigned tdeg = *b.deg;
  const TropicalNumber lead = full.coeff({tdeg});
  bool shape = tdeg >= 2 && *b.lower_deg == 0 && lead.is_tangible() && full.coeff({0}).is_tangible();
  for (unsigned i = 1; shape && i < tdeg; ++i) shape = full.coeff({i}).is_ghost();
  if (!shape) {
    throw Error(ErrorCode::InvalidArgument, "input is not semitangible-full of degree at least 2");
  }
  Polynomial monic = poly_scale(full, trop_inv(lead));
  auto alpha = [&](unsigned i) { return monic.coeff({i}); };
  auto beta = [&](unsigned i) { return t(trop_div(alpha(tdeg - 1), alpha(i)).value()); };

  Polynomial first = Polynomial::univariate({beta(tdeg - 1), alpha(tdeg - 1), TropicalNumber::zero()});
  Polynomial rest(1);
  rest.add_term({tdeg - 2}, TropicalNumber::zero());
  for (unsigned i = 1; i + 3 <= tdeg; ++i) rest.add_term({i}, ghost_of(beta(i)));
  rest.add_term({0}, trop_div(alpha(0), beta(tdeg - 1)));
  if (red_mul(first, rest) != full_closure(monic)) {
    throw Error(ErrorCode::InternalInconsistency, "semitangible split does not expand to its input");
  }
  return {first, rest};
}

}  // namespace tropical
