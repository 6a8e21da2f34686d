#include "tropical/essential.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "tropical/error.hpp"
#include "tropical/lp.hpp"

namespace tropical {

const char* to_string(TermClass c) {
  switch (c) {
    case TermClass::Essential: return "essential";
    case TermClass::QuasiEssential: return "quasi-essential";
    case TermClass::Inessential: return "inessential";
  }
  return "";
}

namespace {

void require_nonempty(const Polynomial& f, const char* what) {
  if (f.is_neg_inf()) throw Error(ErrorCode::EmptyPolynomial, std::string(what) + " of -inf");
}

void require_univariate(const Polynomial& f, const char* what) {
  if (f.arity() != 1) {
    throw Error(ErrorCode::ArityUnsupported,
                std::string(what) + " needs a univariate polynomial, got arity " +
                    std::to_string(f.arity()));
  }
}

std::vector<Rational> to_point(const Exponent& e) { return {e.begin(), e.end()}; }

struct Pt {
  Rational x, y;
};

Rational cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Strict upper hull of points sorted by x ascending with distinct x; returns indices.
std::vector<std::size_t> upper_hull(const std::vector<Pt>& pts) {
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (h.size() >= 2 && cross(pts[h[h.size() - 2]], pts[h.back()], pts[i]) >= 0) h.pop_back();
    h.push_back(i);
  }
  return h;
}

// Height of the polyline through hull vertices at abscissa x (inside the range).
Rational interpolate(const std::vector<Pt>& pts, const std::vector<std::size_t>& hull, const Rational& x) {
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const Pt& a = pts[hull[k]];
    const Pt& b = pts[hull[k + 1]];
    if (x >= a.x && x <= b.x) return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
  }
  return pts[hull.front()].y;
}

void classify_univariate(EssentialComplex& ec) {
  std::vector<std::size_t> order(ec.terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ec.terms[a].exp[0] < ec.terms[b].exp[0]; });
  std::vector<Pt> pts;
  for (std::size_t i : order) pts.push_back({ec.terms[i].exp[0], ec.terms[i].height});
  auto hull = upper_hull(pts);
  std::vector<bool> is_vertex(pts.size(), false);
  for (std::size_t v : hull) is_vertex[v] = true;
  unsigned lo = ec.terms[order.front()].exp[0];
  unsigned hi = ec.terms[order.back()].exp[0];
  for (std::size_t k = 0; k < pts.size(); ++k) {
    LiftedTerm& t = ec.terms[order[k]];
    if (is_vertex[k]) {
      t.cls = TermClass::Essential;
      t.interior_vertex = t.exp[0] != lo && t.exp[0] != hi;
    } else {
      t.cls = interpolate(pts, hull, pts[k].x) == pts[k].y ? TermClass::QuasiEssential
                                                           : TermClass::Inessential;
    }
  }
}

std::optional<Rational> hull_value(const std::vector<std::vector<Rational>>& pts, const std::vector<Rational>& hs,
                                   const std::vector<Rational>& target) {
  if (pts.empty()) return std::nullopt;
  auto r = lp::hull_height(pts, hs, target);
  if (r.status != lp::Status::Optimal) return std::nullopt;
  return r.value;
}

// Each probe point's unique maximizing term is a hull vertex. Probing finds most vertices
// cheaply; the LPs below only confirm the rest.
std::vector<bool> probe_vertices(const std::vector<Exponent>& exps, const std::vector<Rational>& hs,
                                 bool use_heights) {
  const std::size_t m = exps.size(), n = exps.front().size();
  std::vector<bool> found(m, false);
  std::mt19937_64 rng(0x7c0ffee);
  std::vector<long long> w(n);
  Rational v, best;
  for (std::size_t probe = 0; probe < 4 * m + 16; ++probe) {
    // Integer directions at several scales relative to the heights.
    const int scale = 1 << (2 * (probe % 5));
    std::uniform_int_distribution<int> coord(-scale, scale);
    for (auto& x : w) x = coord(rng);
    std::size_t arg = 0;
    bool unique = false;
    for (std::size_t i = 0; i < m; ++i) {
      long long dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += w[k] * static_cast<long long>(exps[i][k]);
      v = Rational(static_cast<long>(dot));
      if (use_heights) v += hs[i];
      if (i == 0 || v > best) {
        best = v;
        arg = i;
        unique = true;
      } else if (v == best) {
        unique = false;
      }
    }
    if (unique) found[arg] = true;
  }
  return found;
}

void classify_general(EssentialComplex& ec) {
  const std::size_t m = ec.terms.size();
  std::vector<std::vector<Rational>> exps;
  std::vector<Rational> hs;
  for (const auto& t : ec.terms) {
    exps.push_back(to_point(t.exp));
    hs.push_back(t.height);
  }
  auto others = [&](std::size_t j, std::vector<std::vector<Rational>>& pts, std::vector<Rational>& h) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      pts.push_back(exps[i]);
      h.push_back(hs[i]);
    }
  };

  std::vector<Exponent> raw;
  for (const auto& t : ec.terms) raw.push_back(t.exp);
  std::vector<bool> vertex = probe_vertices(raw, hs, true);
  std::vector<std::vector<Rational>> known_pts;
  std::vector<Rational> known_hs;
  for (std::size_t i = 0; i < m; ++i) {
    if (vertex[i]) {
      known_pts.push_back(exps[i]);
      known_hs.push_back(hs[i]);
    }
  }
  // A term lying under the hull of known vertices is not a vertex; anything else is
  // settled against all other terms.
  for (std::size_t j = 0; j < m; ++j) {
    if (vertex[j]) continue;
    auto below = hull_value(known_pts, known_hs, exps[j]);
    if (below && *below >= hs[j]) continue;
    std::vector<std::vector<Rational>> pts;
    std::vector<Rational> h;
    others(j, pts, h);
    auto v = hull_value(pts, h, exps[j]);
    vertex[j] = !v || *v < hs[j];
  }

  std::vector<std::vector<Rational>> vpts;
  std::vector<Rational> vhs;
  for (std::size_t i = 0; i < m; ++i) {
    if (vertex[i]) {
      vpts.push_back(exps[i]);
      vhs.push_back(hs[i]);
    }
  }
  std::vector<bool> newton_vertex = probe_vertices(raw, hs, false);
  for (std::size_t j = 0; j < m; ++j) {
    LiftedTerm& t = ec.terms[j];
    if (vertex[j]) {
      t.cls = TermClass::Essential;
      if (!newton_vertex[j]) {
        std::vector<std::vector<Rational>> pts;
        std::vector<Rational> h;
        others(j, pts, h);
        t.interior_vertex = !pts.empty() && lp::in_convex_hull(pts, exps[j]);
      }
    } else {
      // The hull of the remaining terms is the hull of the vertices.
      t.cls = *hull_value(vpts, vhs, exps[j]) == hs[j] ? TermClass::QuasiEssential : TermClass::Inessential;
    }
  }
}

void classify(EssentialComplex& ec) {
  if (ec.arity == 1) {
    classify_univariate(ec);
  } else {
    classify_general(ec);
  }
}

struct Vertex {
  Exponent exp;
  TropicalNumber coeff;
};

std::vector<Vertex> essential_vertices(const Polynomial& f) {
  EssentialComplex ec;
  ec.arity = f.arity();
  for (const auto& [e, c] : f.terms()) ec.terms.push_back({e, c, c.value()});
  classify(ec);
  std::vector<Vertex> out;
  for (const auto& t : ec.terms) {
    if (t.cls == TermClass::Essential) out.push_back({t.exp, t.coeff});
  }
  return out;
}

// All lattice points of the Newton polytope of the vertices with their hull heights.
std::vector<HullPoint> lattice_points(const std::vector<Vertex>& verts, std::size_t arity) {
  std::vector<HullPoint> out;
  if (arity == 1) {
    std::vector<Pt> pts;
    for (const auto& v : verts) pts.push_back({v.exp[0], v.coeff.value()});
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x; });
    std::vector<std::size_t> hull(pts.size());
    for (std::size_t i = 0; i < hull.size(); ++i) hull[i] = i;
    unsigned lo = pts.front().x.get_num().get_ui();
    unsigned hi = pts.back().x.get_num().get_ui();
    std::size_t next = 0;
    for (unsigned d = lo; d <= hi; ++d) {
      bool vertex = next < pts.size() && pts[next].x == d;
      out.push_back({{d}, vertex ? pts[next].y : interpolate(pts, hull, d), vertex});
      if (vertex) ++next;
    }
    return out;
  }

  std::vector<std::vector<Rational>> pts;
  std::vector<Rational> hs;
  Exponent lo(arity, ~0u), hi(arity, 0);
  unsigned dmin = ~0u, dmax = 0;
  std::set<Exponent> vertex_set;
  for (const auto& v : verts) {
    pts.push_back(to_point(v.exp));
    hs.push_back(v.coeff.value());
    vertex_set.insert(v.exp);
    for (std::size_t i = 0; i < arity; ++i) {
      lo[i] = std::min(lo[i], v.exp[i]);
      hi[i] = std::max(hi[i], v.exp[i]);
    }
    dmin = std::min(dmin, total_degree(v.exp));
    dmax = std::max(dmax, total_degree(v.exp));
  }
  Exponent p(arity);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned partial) {
    if (i == arity) {
      if (partial < dmin) return;
      if (vertex_set.count(p)) {
        for (std::size_t k = 0; k < verts.size(); ++k) {
          if (verts[k].exp == p) out.push_back({p, hs[k], true});
        }
        return;
      }
      auto r = lp::hull_height(pts, hs, to_point(p));
      if (r.status == lp::Status::Optimal) out.push_back({p, r.value, false});
      return;
    }
    for (unsigned v = lo[i]; v <= hi[i] && partial + v <= dmax; ++v) {
      p[i] = v;
      rec(i + 1, partial + v);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<std::vector<Exponent>> subdivision_1d(const std::vector<LiftedTerm>& terms) {
  std::vector<const LiftedTerm*> verts;
  for (const auto& t : terms) {
    if (t.cls == TermClass::Essential) verts.push_back(&t);
  }
  std::sort(verts.begin(), verts.end(),
            [](const LiftedTerm* a, const LiftedTerm* b) { return a->exp[0] < b->exp[0]; });
  std::vector<std::vector<Exponent>> cells;
  if (verts.size() == 1) {
    cells.push_back({verts.front()->exp});
    return cells;
  }
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
    unsigned a = verts[k]->exp[0], b = verts[k + 1]->exp[0];
    std::vector<Exponent> cell;
    for (const auto& t : terms) {
      if (t.cls != TermClass::Inessential && t.exp[0] >= a && t.exp[0] <= b) cell.push_back(t.exp);
    }
    std::sort(cell.begin(), cell.end());
    cells.push_back(cell);
  }
  return cells;
}

std::vector<std::vector<Exponent>> subdivision_2d(const std::vector<LiftedTerm>& terms) {
  std::vector<const LiftedTerm*> verts;
  for (const auto& t : terms) {
    if (t.cls == TermClass::Essential) verts.push_back(&t);
  }
  auto X = [](const LiftedTerm* t) { return Rational(t->exp[0]); };
  auto Y = [](const LiftedTerm* t) { return Rational(t->exp[1]); };

  std::set<std::vector<Exponent>> cells;
  bool any_triangle = false;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      for (std::size_t k = j + 1; k < verts.size(); ++k) {
        const LiftedTerm *a = verts[i], *b = verts[j], *c = verts[k];
        Rational ux = X(b) - X(a), uy = Y(b) - Y(a), vx = X(c) - X(a), vy = Y(c) - Y(a);
        Rational det = ux * vy - uy * vx;
        if (det == 0) continue;
        any_triangle = true;
        Rational uz = b->height - a->height, vz = c->height - a->height;
        // Plane z = a.h + p (x - a.x) + q (y - a.y).
        Rational p = (uz * vy - uy * vz) / det;
        Rational q = (ux * vz - uz * vx) / det;
        std::vector<Exponent> cell;
        bool upper = true;
        for (const auto& t : terms) {
          Rational z = a->height + p * (Rational(t.exp[0]) - X(a)) + q * (Rational(t.exp[1]) - Y(a));
          if (t.height > z) {
            upper = false;
            break;
          }
          if (t.height == z) cell.push_back(t.exp);
        }
        if (!upper) continue;
        std::sort(cell.begin(), cell.end());
        cells.insert(cell);
      }
    }
  }
  if (!any_triangle) {
    // Newton polytope is a segment or a point: order the vertices along the line.
    std::vector<LiftedTerm> projected;
    const LiftedTerm* origin = verts.front();
    Exponent dir(2, 0);
    for (const auto* v : verts) {
      if (v->exp != origin->exp) {
        dir = v->exp;
        break;
      }
    }
    bool use_y = dir[0] == origin->exp[0];
    for (const auto& t : terms) {
      LiftedTerm copy = t;
      copy.exp = {use_y ? t.exp[1] : t.exp[0]};
      projected.push_back(copy);
    }
    std::vector<std::vector<Exponent>> out;
    for (auto& cell : subdivision_1d(projected)) {
      std::vector<Exponent> lifted;
      for (const auto& e : cell) {
        for (const auto& t : terms) {
          if ((use_y ? t.exp[1] : t.exp[0]) == e[0] && t.cls != TermClass::Inessential) {
            lifted.push_back(t.exp);
          }
        }
      }
      std::sort(lifted.begin(), lifted.end());
      out.push_back(lifted);
    }
    return out;
  }
  return {cells.begin(), cells.end()};
}

}  // namespace

EssentialComplex classify_monomials(const Polynomial& f) {
  require_nonempty(f, "classification");
  EssentialComplex ec;
  ec.arity = f.arity();
  for (const auto& [e, c] : f.terms()) ec.terms.push_back({e, c, c.value()});
  classify(ec);
  std::vector<Vertex> verts;
  for (const auto& t : ec.terms) {
    if (t.cls == TermClass::Essential) verts.push_back({t.exp, t.coeff});
  }
  ec.hull_lattice_points = lattice_points(verts, f.arity());
  if (f.arity() == 1) {
    ec.subdivision = subdivision_1d(ec.terms);
  } else if (f.arity() == 2) {
    ec.subdivision = subdivision_2d(ec.terms);
  }
  return ec;
}

Polynomial essential_part(const Polynomial& f) {
  require_nonempty(f, "essential part");
  Polynomial out(f.arity());
  for (const auto& v : essential_vertices(f)) out.set_term(v.exp, v.coeff);
  return out;
}

Polynomial full_closure(const Polynomial& f) {
  require_nonempty(f, "full closure");
  auto verts = essential_vertices(f);
  Polynomial out(f.arity());
  for (const auto& v : verts) out.set_term(v.exp, v.coeff);
  for (const auto& hp : lattice_points(verts, f.arity())) {
    if (!hp.vertex) out.set_term(hp.exp, TropicalNumber::ghost(hp.height));
  }
  return out;
}

bool is_full(const Polynomial& f) { return !f.is_neg_inf() && full_closure(f) == f; }

bool equivalent(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity()) throw Error(ErrorCode::ArityMismatch, "equivalence of different arities");
  if (f.is_neg_inf() || g.is_neg_inf()) return f.is_neg_inf() && g.is_neg_inf();
  return essential_part(f) == essential_part(g);
}

Polynomial red_add(const Polynomial& f, const Polynomial& g) {
  Polynomial raw = poly_add(f, g);
  return raw.is_neg_inf() ? raw : full_closure(raw);
}

Polynomial red_mul(const Polynomial& f, const Polynomial& g) {
  Polynomial raw = poly_mul(f, g);
  return raw.is_neg_inf() ? raw : full_closure(raw);
}

Polynomial red_pow(const Polynomial& f, unsigned k) {
  Polynomial result = Polynomial::constant(f.arity(), TropicalNumber::zero());
  if (k == 0) return result;
  if (f.is_neg_inf()) return f;
  Polynomial base = full_closure(f);
  bool first = true;
  while (k > 0) {
    if (k & 1u) {
      result = first ? base : red_mul(result, base);
      first = false;
    }
    k >>= 1u;
    if (k > 0) base = red_mul(base, base);
  }
  return result;
}

std::vector<Corner> corners(const Polynomial& f) {
  require_univariate(f, "corners");
  require_nonempty(f, "corners");
  auto verts = essential_vertices(f);
  std::sort(verts.begin(), verts.end(),
            [](const Vertex& a, const Vertex& b) { return a.exp[0] < b.exp[0]; });
  std::vector<Corner> out;
  for (std::size_t k = verts.size(); k-- > 1;) {
    const auto& lo = verts[k - 1];
    const auto& hi = verts[k];
    unsigned m = hi.exp[0] - lo.exp[0];
    out.push_back({Rational((lo.coeff.value() - hi.coeff.value()) / m), m});
  }
  if (verts.front().exp[0] > 0) out.push_back({std::nullopt, verts.front().exp[0]});
  return out;
}

SlopeSequence slope_sequence(const Polynomial& f) {
  require_univariate(f, "slope sequence");
  require_nonempty(f, "slope sequence");
  if (f.is_monomial()) throw Error(ErrorCode::MonomialInput, "a monomial has no slopes");
  Polynomial full = full_closure(f);
  auto b = degree_bounds(full);
  SlopeSequence s;
  for (unsigned d = *b.deg; d > *b.lower_deg; --d) {
    s.slopes.push_back(full.coeff({d - 1}).value() - full.coeff({d}).value());
    s.edges.emplace_back(d, d - 1);
  }
  return s;
}

namespace {

// Finite corner values of a univariate polynomial, for sampling.
std::vector<Rational> finite_corners(const Polynomial& f) {
  std::vector<Rational> out;
  if (f.is_neg_inf() || f.is_monomial()) return out;
  for (const auto& c : corners(f)) {
    if (c.value) out.push_back(*c.value);
  }
  return out;
}

}  // namespace

std::optional<Polynomial> divides(const Polynomial& g, const Polynomial& f) {
  require_univariate(f, "divisibility");
  require_univariate(g, "divisibility");
  if (f.is_neg_inf()) return Polynomial::neg_inf(1);
  if (g.is_neg_inf()) return std::nullopt;
  Polynomial ft = full_closure(f), gt = full_closure(g);
  auto bf = degree_bounds(ft), bg = degree_bounds(gt);
  if (*bf.deg < *bg.deg || *bf.lower_deg < *bg.lower_deg) return std::nullopt;

  // Corner multiset difference.
  auto cf = corners(ft), cg = corners(gt);
  std::vector<Corner> cq;
  std::size_t j = 0;
  for (const auto& c : cf) {
    unsigned m = c.multiplicity;
    if (j < cg.size() && compare_extended(cg[j].value, c.value) == 0) {
      if (cg[j].multiplicity > m) return std::nullopt;
      m -= cg[j].multiplicity;
      ++j;
    } else if (j < cg.size() && compare_extended(cg[j].value, c.value) > 0) {
      return std::nullopt;
    }
    if (m > 0) cq.push_back({c.value, m});
  }
  if (j != cg.size()) return std::nullopt;

  // Hull of q from the top down.
  struct QVertex {
    unsigned deg;
    Rational height;
  };
  std::vector<QVertex> qv;
  unsigned d = *bf.deg - *bg.deg;
  Rational h = ft.leading().second.value() - gt.leading().second.value();
  qv.push_back({d, h});
  std::vector<Rational> qcorners;
  for (const auto& c : cq) {
    if (!c.value) break;
    h += *c.value * c.multiplicity;
    d -= c.multiplicity;
    qv.push_back({d, h});
    qcorners.push_back(*c.value);
  }

  std::vector<Rational> breaks = finite_corners(ft);
  for (const auto& r : finite_corners(gt)) breaks.push_back(r);
  for (const auto& r : qcorners) breaks.push_back(r);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  Polynomial q(1);
  for (std::size_t i = 0; i < qv.size(); ++i) {
    // Vertex i dominates on (qcorners[i], qcorners[i-1]) with open ends at the extremes.
    std::optional<Rational> lo, hi;
    if (i < qcorners.size()) lo = qcorners[i];
    if (i > 0) hi = qcorners[i - 1];
    std::vector<Rational> samples;
    std::vector<Rational> inside;
    for (const auto& r : breaks) {
      if ((!lo || r > *lo) && (!hi || r < *hi)) inside.push_back(r);
    }
    std::vector<Rational> fence;
    if (lo) fence.push_back(*lo);
    for (const auto& r : inside) fence.push_back(r);
    if (hi) fence.push_back(*hi);
    if (!lo) samples.push_back((fence.empty() ? Rational(0) : fence.front()) - 1);
    for (std::size_t k = 0; k + 1 < fence.size(); ++k) samples.push_back((fence[k] + fence[k + 1]) / 2);
    if (!hi) samples.push_back((fence.empty() ? Rational(0) : fence.back()) + 1);

    bool need_tangible = false, need_ghost = false;
    for (const auto& x : samples) {
      std::vector<TropicalNumber> pt{TropicalNumber::tangible(x)};
      auto fv = evaluate(ft, pt);
      auto gv = evaluate(gt, pt);
      if (fv.is_tangible()) need_tangible = true;
      if (fv.is_ghost() && gv.is_tangible()) need_ghost = true;
    }
    if (need_tangible && need_ghost) return std::nullopt;
    q.set_term({qv[i].deg}, need_ghost ? TropicalNumber::ghost(qv[i].height)
                                       : TropicalNumber::tangible(qv[i].height));
  }
  q = full_closure(q);
  if (red_mul(q, gt) != ft) return std::nullopt;
  return q;
}

}  // namespace tropical
