#include "tropical/sets.hpp"

#include <algorithm>

#include "tropical/error.hpp"
#include "tropical/essential.hpp"

namespace tropical {

bool OpenInterval::contains(const Rational& x) const {
  return (!lo || x > *lo) && (!hi || x < *hi);
}

bool OpenInterval::is_subset_of(const OpenInterval& other) const {
  bool lo_ok = !other.lo || (lo && *lo >= *other.lo);
  bool hi_ok = !other.hi || (hi && *hi <= *other.hi);
  return lo_ok && hi_ok;
}

std::optional<OpenInterval> intersect(const OpenInterval& a, const OpenInterval& b) {
  OpenInterval r;
  r.lo = !a.lo ? b.lo : !b.lo ? a.lo : std::max(*a.lo, *b.lo);
  r.hi = !a.hi ? b.hi : !b.hi ? a.hi : std::min(*a.hi, *b.hi);
  if (r.lo && r.hi && *r.lo >= *r.hi) return std::nullopt;
  return r;
}

bool Component1D::contains(const TropicalNumber& x) const {
  switch (x.tag()) {
    case Tag::NegInfinity: return contains_neg_infinity;
    case Tag::Tangible: return tangible && tangible->contains(x.value());
    case Tag::Ghost: return ghost && ghost->contains(x.value());
  }
  return false;
}

bool Component1D::is_subset_of(const Component1D& other) const {
  if (tangible && !(other.tangible && tangible->is_subset_of(*other.tangible))) return false;
  if (ghost && !(other.ghost && ghost->is_subset_of(*other.ghost))) return false;
  return !contains_neg_infinity || other.contains_neg_infinity;
}

bool ComSet1D::contains(const TropicalNumber& x) const {
  return std::any_of(components.begin(), components.end(),
                     [&](const Component1D& c) { return c.contains(x); });
}

bool zset_contains(const std::vector<Polynomial>& fs, const std::vector<TropicalNumber>& point) {
  return std::all_of(fs.begin(), fs.end(), [&](const Polynomial& f) { return is_root(f, point); });
}

ComSet1D comset1d(const Polynomial& f) {
  if (f.arity() != 1) {
    throw Error(ErrorCode::ArityUnsupported, "com-sets are enumerated for univariate polynomials only");
  }
  ComSet1D out;
  if (f.is_neg_inf() || f.is_ghost()) return out;
  struct V {
    unsigned deg;
    TropicalNumber coeff;
  };
  std::vector<V> verts;
  const Polynomial fe = essential_part(f);
  for (const auto& [e, c] : fe.terms()) verts.push_back({e[0], c});
  std::reverse(verts.begin(), verts.end());  // ascending degree

  std::vector<Rational> corner;  // corner[i] between verts[i] and verts[i+1], ascending
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    corner.push_back((verts[i].coeff.value() - verts[i + 1].coeff.value()) /
                     (verts[i + 1].deg - verts[i].deg));
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!verts[i].coeff.is_tangible()) continue;
    Component1D c;
    OpenInterval iv;
    if (i > 0) iv.lo = corner[i - 1];
    if (i < corner.size()) iv.hi = corner[i];
    c.tangible = iv;
    if (i == 0 && verts[i].deg == 0) {
      // Only the constant term stays tangible at ghost points and at -inf.
      c.ghost = OpenInterval{std::nullopt, iv.hi};
      c.contains_neg_infinity = true;
    }
    out.components.push_back(c);
  }
  return out;
}

namespace {

void sort_components(std::vector<Component1D>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Component1D& a, const Component1D& b) {
    if (!a.tangible || !b.tangible) return a.tangible.has_value() && !b.tangible.has_value();
    if (!a.tangible->lo || !b.tangible->lo) return !a.tangible->lo && b.tangible->lo;
    return *a.tangible->lo < *b.tangible->lo;
  });
}

}  // namespace

ComSet1D comset_meet(const ComSet1D& a, const ComSet1D& b) {
  ComSet1D out;
  for (const auto& x : a.components) {
    for (const auto& y : b.components) {
      Component1D c;
      if (x.tangible && y.tangible) c.tangible = intersect(*x.tangible, *y.tangible);
      if (x.ghost && y.ghost) c.ghost = intersect(*x.ghost, *y.ghost);
      c.contains_neg_infinity = x.contains_neg_infinity && y.contains_neg_infinity;
      if (!c.empty()) out.components.push_back(c);
    }
  }
  sort_components(out.components);
  return out;
}

bool comset_leq(const ComSet1D& a, const ComSet1D& b) {
  return std::all_of(a.components.begin(), a.components.end(), [&](const Component1D& d) {
    return std::any_of(b.components.begin(), b.components.end(),
                       [&](const Component1D& e) { return d.is_subset_of(e); });
  });
}

namespace {

struct Affine {
  Exponent exp;
  Rational h;
  Rational ex, ey;
};

// Parameter range [lo, hi] along a line; absent ends are unbounded.
struct Range {
  std::optional<Rational> lo, hi;
  bool empty = false;

  void at_least(const Rational& v) {
    if (!lo || v > *lo) lo = v;
  }
  void at_most(const Rational& v) {
    if (!hi || v < *hi) hi = v;
  }
  bool degenerate() const { return empty || (lo && hi && *lo >= *hi); }
};

// Restricts r to parameters t with a + t b >= 0.
void constrain(Range& r, const Rational& a, const Rational& b) {
  if (b == 0) {
    if (a < 0) r.empty = true;
  } else if (b > 0) {
    r.at_least(-a / b);
  } else {
    r.at_most(-a / b);
  }
}

// Restricts r to parameters keeping p0 + t d inside [lo, hi] along one axis.
void clip_axis(Range& r, const Rational& p, const Rational& d, const Rational& lo, const Rational& hi) {
  constrain(r, p - lo, d);
  constrain(r, hi - p, -d);
}

bool inside(const Point2& p, const BBox& b) {
  return p[0] >= b.xmin && p[0] <= b.xmax && p[1] >= b.ymin && p[1] <= b.ymax;
}

}  // namespace

CornerLocus corner_locus_2d(const Polynomial& f, const BBox& bbox) {
  if (f.arity() != 2) throw Error(ErrorCode::ArityUnsupported, "corner locus needs arity 2");
  CornerLocus out;
  if (f.is_neg_inf() || f.is_ghost()) {
    out.whole_plane = true;
    return out;
  }
  std::vector<Affine> ess, all;
  for (const auto& [e, c] : f.terms()) all.push_back({e, c.value(), e[0], e[1]});
  const Polynomial fe = essential_part(f);
  for (const auto& [e, c] : fe.terms()) {
    ess.push_back({e, c.value(), e[0], e[1]});
    if (c.is_ghost()) out.ghost_regions.push_back(e);
  }
  if (out.ghost_regions.size() == ess.size()) {
    out.whole_plane = true;
    return out;
  }

  for (std::size_t i = 0; i < ess.size(); ++i) {
    for (std::size_t j = i + 1; j < ess.size(); ++j) {
      const Affine& A = ess[i];
      const Affine& B = ess[j];
      Rational wx = A.ex - B.ex, wy = A.ey - B.ey;
      Rational norm = wx * wx + wy * wy;
      Point2 p0{wx * (B.h - A.h) / norm, wy * (B.h - A.h) / norm};
      mpz_class g = gcd(wx.get_num(), wy.get_num());
      Point2 d{-wy / g, wx / g};

      Range r;
      for (std::size_t k = 0; k < ess.size() && !r.empty; ++k) {
        if (k == i || k == j) continue;
        const Affine& K = ess[k];
        Rational a = (A.h - K.h) + (A.ex - K.ex) * p0[0] + (A.ey - K.ey) * p0[1];
        Rational b = (A.ex - K.ex) * d[0] + (A.ey - K.ey) * d[1];
        constrain(r, a, b);
      }
      if (r.degenerate()) continue;

      std::vector<Exponent> tying;
      for (const auto& K : all) {
        Rational a = (A.h - K.h) + (A.ex - K.ex) * p0[0] + (A.ey - K.ey) * p0[1];
        Rational b = (A.ex - K.ex) * d[0] + (A.ey - K.ey) * d[1];
        if (a == 0 && b == 0) tying.push_back(K.exp);
      }
      auto at = [&](const Rational& t) { return Point2{p0[0] + t * d[0], p0[1] + t * d[1]}; };

      if (r.lo.has_value() != r.hi.has_value()) {
        Point2 origin = at(r.lo ? *r.lo : *r.hi);
        if (inside(origin, bbox)) {
          Point2 dir = r.lo ? d : Point2{-d[0], -d[1]};
          out.rays.push_back({origin, dir, tying});
          continue;
        }
      }
      clip_axis(r, p0[0], d[0], bbox.xmin, bbox.xmax);
      clip_axis(r, p0[1], d[1], bbox.ymin, bbox.ymax);
      if (r.degenerate() || !r.lo || !r.hi) continue;
      out.segments.push_back({at(*r.lo), at(*r.hi), tying});
    }
  }
  return out;
}

}  // namespace tropical
