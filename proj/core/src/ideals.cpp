#include "tropical/ideals.hpp"

#include <algorithm>
#include <set>

#include "tropical/error.hpp"
#include "tropical/essential.hpp"
#include "tropical/sets.hpp"
#include "tropical/univariate.hpp"

namespace tropical {

Ideal::Ideal(std::size_t arity, const std::vector<Polynomial>& generators) : arity_(arity) {
  for (const auto& g : generators) {
    if (g.arity() != arity) throw Error(ErrorCode::ArityMismatch, "generator arity differs from ideal");
    if (g.is_neg_inf()) continue;
    Polynomial closed = full_closure(g);
    if (std::find(gens_.begin(), gens_.end(), closed) == gens_.end()) gens_.push_back(closed);
  }
}

namespace {

// Largest tangible h with h ⊙ g bounded coefficientwise by target, restricted to
// total degree at most max_deg.
Polynomial greatest_subsolution(const Polynomial& target, const Polynomial& g, unsigned max_deg) {
  std::set<Exponent> candidates;
  for (const auto& [ef, cf] : target.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      bool ok = true;
      Exponent e(ef.size());
      for (std::size_t i = 0; i < e.size() && ok; ++i) {
        ok = ef[i] >= eg[i];
        if (ok) e[i] = ef[i] - eg[i];
      }
      if (ok && total_degree(e) <= max_deg) candidates.insert(e);
    }
  }
  Polynomial h(target.arity());
  for (const auto& e : candidates) {
    std::optional<Rational> best;
    bool feasible = true;
    for (const auto& [eg, cg] : g.terms()) {
      Exponent s = e;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += eg[i];
      TropicalNumber t = target.coeff(s);
      if (t.is_neg_inf()) {
        feasible = false;
        break;
      }
      Rational v = t.value() - cg.value();
      if (!best || v < *best) best = v;
    }
    if (feasible && best) h.set_term(e, TropicalNumber::tangible(*best));
  }
  return h;
}

bool combination_matches(const Polynomial& target, const std::vector<Polynomial>& gens,
                         const std::vector<Polynomial>& hs) {
  Polynomial sum(target.arity());
  for (std::size_t i = 0; i < gens.size(); ++i) sum = poly_add(sum, poly_mul(hs[i], gens[i]));
  return !sum.is_neg_inf() && full_closure(sum) == target;
}

}  // namespace

MembershipResult ideal_member_syntactic(const Polynomial& f, const Ideal& ideal) {
  if (f.arity() != ideal.arity()) throw Error(ErrorCode::ArityMismatch, "polynomial and ideal arity differ");
  MembershipResult res;
  const auto& gens = ideal.generators();
  if (f.is_neg_inf()) {
    res.found = true;
    res.combiners.assign(gens.size(), Polynomial::neg_inf(f.arity()));
    return res;
  }
  Polynomial target = full_closure(f);
  const unsigned fdeg = *degree_bounds(target).deg;

  std::vector<Polynomial> full_h, ess_h;
  for (const auto& g : gens) {
    unsigned low = *degree_bounds(g).lower_deg;
    Polynomial h = low <= fdeg ? greatest_subsolution(target, g, fdeg - low) : Polynomial(f.arity());
    full_h.push_back(h);
    ess_h.push_back(h.is_neg_inf() ? h : essential_part(h));
  }

  // Try every nonempty generator subset (bounded), first with the full subsolutions then
  // with their essential parts.
  const std::size_t n = gens.size();
  const std::size_t limit = n <= 8 ? (std::size_t{1} << n) : 1;
  std::vector<std::size_t> masks;
  masks.push_back(limit == 1 ? 0 : limit - 1);
  for (std::size_t mask = 1; mask + 1 < limit; ++mask) masks.push_back(mask);
  for (const auto* hs : {&full_h, &ess_h}) {
    for (std::size_t mask : masks) {
      std::vector<Polynomial> chosen(n, Polynomial::neg_inf(f.arity()));
      for (std::size_t i = 0; i < n; ++i) {
        if (limit == 1 || (mask >> i) & 1u) chosen[i] = (*hs)[i];
      }
      if (combination_matches(target, gens, chosen)) {
        res.found = true;
        res.combiners = std::move(chosen);
        return res;
      }
    }
  }
  return res;
}

bool is_proper(const Ideal& ideal) {
  return std::none_of(ideal.generators().begin(), ideal.generators().end(),
                      [](const Polynomial& g) { return g.is_constant() && g.is_tangible(); });
}

std::variant<Witness, EmptinessProof> weak_nullstellensatz(const Ideal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (g.is_constant() && g.is_tangible()) return EmptinessProof{g};
  }
  if (ideal.generators().empty()) {
    return Witness{std::vector<TropicalNumber>(ideal.arity(), TropicalNumber::zero())};
  }
  return Witness{common_root(ideal.generators())};
}

bool is_ghost_potent(const Polynomial& f) {
  if (f.is_neg_inf()) return true;
  return essential_part(f).is_ghost();
}

std::vector<TropicalNumber> certificate_grid(const std::vector<Polynomial>& polys, std::size_t min_points) {
  std::vector<Rational> marks;
  for (const auto& p : polys) {
    if (p.is_neg_inf() || p.is_monomial()) continue;
    for (const auto& c : corners(p)) {
      if (c.value) marks.push_back(*c.value);
    }
  }
  Rational lo = marks.empty() ? Rational(-5) : *std::min_element(marks.begin(), marks.end()) - 3;
  Rational hi = marks.empty() ? Rational(5) : *std::max_element(marks.begin(), marks.end()) + 3;
  std::vector<TropicalNumber> pts{TropicalNumber::neg_inf()};
  for (const auto& m : marks) {
    pts.push_back(TropicalNumber::tangible(m));
    pts.push_back(TropicalNumber::ghost(m));
  }
  const std::size_t steps = (min_points + 1) / 2;
  for (std::size_t k = 0; k <= steps; ++k) {
    Rational x = lo + (hi - lo) * Rational(k, steps);
    x.canonicalize();
    pts.push_back(TropicalNumber::tangible(x));
    pts.push_back(TropicalNumber::ghost(x));
  }
  return pts;
}

std::optional<RadicalCertificate> radical_member_1d(const Polynomial& f, const Ideal& ideal) {
  if (f.arity() != 1 || ideal.arity() != 1) {
    throw Error(ErrorCode::ArityUnsupported, "radical membership is decided for univariate ideals only");
  }
  const auto& gens = ideal.generators();
  if (f.is_neg_inf()) {
    return RadicalCertificate{1, std::vector<Polynomial>(gens.size(), Polynomial::neg_inf(1))};
  }
  Polynomial ft = full_closure(f);
  Polynomial fe = essential_part(ft);
  if (!fe.is_tangible()) throw Error(ErrorCode::NotTangibleFull, "essential part has a ghost coefficient");

  // Dominating monomial on each component: the lowest vertex whose interval matches.
  struct Piece {
    std::size_t gen;
    unsigned i;  // exponent of f's dominant monomial
    Rational alpha;
    unsigned r;  // exponent of the generator's dominant monomial
    Rational beta;
  };
  auto dominant = [](const Polynomial& p, const Component1D& d) {
    // A sample point inside the tangible interval picks the dominating vertex.
    const auto& iv = *d.tangible;
    Rational x = iv.lo && iv.hi ? Rational((*iv.lo + *iv.hi) / 2)
                 : iv.lo        ? Rational(*iv.lo + 1)
                 : iv.hi        ? Rational(*iv.hi - 1)
                                : Rational(0);
    const std::pair<const Exponent, TropicalNumber>* best = nullptr;
    Rational best_v;
    for (const auto& term : p.terms()) {
      Rational v = term.second.value() + x * term.first[0];
      if (!best || v > best_v) {
        best = &term;
        best_v = v;
      }
    }
    return std::make_pair(best->first[0], best->second.value());
  };

  ComSet1D cf = comset1d(ft);
  std::vector<ComSet1D> cg;
  for (const auto& g : gens) cg.push_back(comset1d(g));
  std::vector<Piece> pieces;
  for (const auto& d : cf.components) {
    bool placed = false;
    for (std::size_t j = 0; j < gens.size() && !placed; ++j) {
      for (const auto& e : cg[j].components) {
        if (!d.is_subset_of(e)) continue;
        auto [i, alpha] = dominant(fe, d);
        auto [r, beta] = dominant(gens[j], e);
        pieces.push_back({j, i, alpha, r, beta});
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }

  unsigned m1 = 1;
  for (const auto& p : pieces) {
    if (p.i == 0) continue;
    m1 = std::max(m1, (p.r + p.i - 1) / p.i);
  }
  constexpr unsigned kMaxExponent = 64;
  for (unsigned m = m1; m <= kMaxExponent; ++m) {
    bool exponents_ok = std::all_of(pieces.begin(), pieces.end(),
                                    [&](const Piece& p) { return m * p.i >= p.r; });
    if (!exponents_ok) continue;
    std::vector<Polynomial> hs(gens.size(), Polynomial::neg_inf(1));
    for (const auto& p : pieces) {
      Exponent e{m * p.i - p.r};
      TropicalNumber c = TropicalNumber::tangible(p.alpha * m - p.beta);
      TropicalNumber old = hs[p.gen].coeff(e);
      if (old.is_neg_inf() || compare(c, old) > 0) hs[p.gen].set_term(e, c);
    }
    Polynomial lhs = red_pow(ft, m);
    Polynomial sum(1);
    for (std::size_t j = 0; j < gens.size(); ++j) sum = poly_add(sum, poly_mul(hs[j], gens[j]));
    if (sum.is_neg_inf() || full_closure(sum) != lhs) continue;
    bool grid_ok = true;
    for (const auto& x : certificate_grid({lhs, sum}, 100)) {
      if (evaluate(lhs, {x}) != evaluate(sum, {x})) {
        grid_ok = false;
        break;
      }
    }
    if (grid_ok) return RadicalCertificate{m, hs};
  }
  throw Error(ErrorCode::CertificateSearchExceeded, "no certificate with exponent up to 64");
}

}  // namespace tropical
