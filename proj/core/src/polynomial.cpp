#include "tropical/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tropical/error.hpp"

namespace tropical {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexDescending::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_same_arity(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity()) {
    throw Error(ErrorCode::ArityMismatch, "arity " + std::to_string(f.arity()) + " vs " +
                                              std::to_string(g.arity()));
  }
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw Error(ErrorCode::InvalidArgument, "arity must be positive");
}

Polynomial Polynomial::constant(std::size_t arity, const TropicalNumber& c) {
  Polynomial p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const TropicalNumber& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  Exponent e(arity, 0);
  e.at(index) = 1;
  return monomial(e, TropicalNumber::zero());
}

Polynomial Polynomial::univariate(const std::vector<TropicalNumber>& coeffs_by_degree) {
  Polynomial p(1);
  for (std::size_t i = 0; i < coeffs_by_degree.size(); ++i) {
    p.add_term({static_cast<unsigned>(i)}, coeffs_by_degree[i]);
  }
  return p;
}

void Polynomial::add_term(const Exponent& e, const TropicalNumber& c) {
  if (e.size() != arity_) throw Error(ErrorCode::ArityMismatch, "exponent length differs from arity");
  if (c.is_neg_inf()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second = trop_add(it->second, c);
}

void Polynomial::set_term(const Exponent& e, const TropicalNumber& c) {
  if (e.size() != arity_) throw Error(ErrorCode::ArityMismatch, "exponent length differs from arity");
  if (c.is_neg_inf()) {
    terms_.erase(e);
  } else {
    terms_.insert_or_assign(e, c);
  }
}

TropicalNumber Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? TropicalNumber::neg_inf() : it->second;
}

bool Polynomial::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return total_degree(t.first) == 0; });
}

bool Polynomial::is_tangible() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_tangible(); });
}

bool Polynomial::is_ghost() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_ghost(); });
}

const std::pair<const Exponent, TropicalNumber>& Polynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::EmptyPolynomial, "the polynomial -inf has no leading term");
  return *terms_.begin();
}

bool Polynomial::operator==(const Polynomial& other) const {
  return arity_ == other.arity_ && terms_ == other.terms_;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  require_same_arity(f, g);
  Polynomial out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e, c);
  return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same_arity(f, g);
  Polynomial out(f.arity());
  Exponent e(f.arity());
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
      out.add_term(e, trop_mul(cf, cg));
    }
  }
  return out;
}

Polynomial poly_pow(const Polynomial& f, unsigned k) {
  Polynomial out = Polynomial::constant(f.arity(), TropicalNumber::zero());
  for (unsigned i = 0; i < k; ++i) out = poly_mul(out, f);
  return out;
}

Polynomial poly_scale(const Polynomial& f, const TropicalNumber& c) {
  return poly_mul(f, Polynomial::constant(f.arity(), c));
}

TropicalNumber evaluate(const Polynomial& f, const std::vector<TropicalNumber>& point) {
  if (point.size() != f.arity()) {
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, polynomial arity is " +
                                              std::to_string(f.arity()));
  }
  TropicalNumber sum;
  for (const auto& [e, c] : f.terms()) {
    TropicalNumber v = c;
    for (std::size_t i = 0; i < e.size() && !v.is_neg_inf(); ++i) {
      if (e[i] > 0) v = trop_mul(v, trop_pow(point[i], e[i]));
    }
    sum = trop_add(sum, v);
  }
  return sum;
}

bool is_root(const Polynomial& f, const std::vector<TropicalNumber>& point) {
  return evaluate(f, point).is_ghost_or_neg_inf();
}

DegreeBounds degree_bounds(const Polynomial& f) {
  DegreeBounds b;
  for (const auto& [e, c] : f.terms()) {
    unsigned d = total_degree(e);
    if (!b.deg || d > *b.deg) b.deg = d;
    if (!b.lower_deg || d < *b.lower_deg) b.lower_deg = d;
  }
  return b;
}

std::pair<Polynomial, Polynomial> tg_decompose(const Polynomial& f) {
  Polynomial t(f.arity()), g(f.arity());
  for (const auto& [e, c] : f.terms()) (c.is_tangible() ? t : g).set_term(e, c);
  return {t, g};
}

Polynomial project_poly(const Polynomial& f) {
  Polynomial out(f.arity());
  for (const auto& [e, c] : f.terms()) out.set_term(e, TropicalNumber::tangible(c.value()));
  return out;
}

Polynomial ghost_poly(const Polynomial& f) {
  Polynomial out(f.arity());
  for (const auto& [e, c] : f.terms()) out.set_term(e, ghost_of(c));
  return out;
}

std::pair<Polynomial, Polynomial> ru_decompose(const Polynomial& f) {
  return {project_poly(f), project_poly(tg_decompose(f).second)};
}

Polynomial termwise_pow(const Polynomial& f, unsigned k) {
  Polynomial out(f.arity());
  for (const auto& [e, c] : f.terms()) {
    Exponent ek = e;
    for (auto& x : ek) x *= k;
    out.add_term(ek, trop_pow(c, k));
  }
  return out;
}

}  // namespace tropical
