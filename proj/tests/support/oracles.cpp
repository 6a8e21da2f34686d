#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "tropical/syntax.hpp"

namespace tropical::testing {

namespace {

struct Classical {
  std::optional<Rational> max;
  std::vector<Exponent> argmax;
  bool ghost = false;
};

Classical classical(const Polynomial& f, const std::vector<TropicalNumber>& point) {
  Classical out;
  for (const auto& [e, c] : f.terms()) {
    Rational v = c.value();
    bool ghost = c.is_ghost();
    bool dead = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (point[i].is_neg_inf()) {
        dead = true;
        break;
      }
      v += e[i] * point[i].value();
      ghost = ghost || point[i].is_ghost();
    }
    if (dead) continue;
    if (!out.max || v > *out.max) {
      out.max = v;
      out.argmax = {e};
      out.ghost = ghost;
    } else if (v == *out.max) {
      out.argmax.push_back(e);
      out.ghost = out.ghost || ghost;
    }
  }
  return out;
}

std::vector<Rational> breakpoints_1d(const Polynomial& f) {
  std::set<Rational> b;
  for (const auto& [e1, c1] : f.terms()) {
    for (const auto& [e2, c2] : f.terms()) {
      if (e1[0] > e2[0]) b.insert((c2.value() - c1.value()) / (e1[0] - e2[0]));
    }
  }
  return {b.begin(), b.end()};
}

std::vector<TropicalNumber> at(const Rational& x) { return {TropicalNumber::tangible(x)}; }

std::string point_text(const std::vector<TropicalNumber>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
  return s + ")";
}

}  // namespace

TropicalNumber eval_oracle(const Polynomial& f, const std::vector<TropicalNumber>& point) {
  Classical c = classical(f, point);
  if (!c.max) return TropicalNumber::neg_inf();
  bool ghost = c.ghost || c.argmax.size() > 1;
  return ghost ? TropicalNumber::ghost(*c.max) : TropicalNumber::tangible(*c.max);
}

bool root_oracle(const Polynomial& f, const std::vector<TropicalNumber>& point) {
  return !eval_oracle(f, point).is_tangible();
}

std::optional<std::vector<TropicalNumber>> first_disagreement(
    const Polynomial& f, const Polynomial& g, const std::vector<std::vector<TropicalNumber>>& points) {
  for (const auto& p : points) {
    if (!(eval_oracle(f, p) == eval_oracle(g, p))) return p;
  }
  return std::nullopt;
}

std::vector<unsigned> dominating_degrees_1d(const Polynomial& f) {
  std::vector<Rational> b = breakpoints_1d(f);
  std::vector<Rational> probes;
  if (b.empty()) {
    probes.push_back(0);
  } else {
    probes.push_back(b.front() - 1);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) probes.push_back((b[i] + b[i + 1]) / 2);
    probes.push_back(b.back() + 1);
  }
  std::set<unsigned> out;
  for (const auto& x : probes) {
    Classical c = classical(f, at(x));
    if (c.argmax.size() == 1) out.insert(c.argmax.front()[0]);
  }
  return {out.begin(), out.end()};
}

std::vector<unsigned> tying_only_degrees_1d(const Polynomial& f) {
  auto dom = dominating_degrees_1d(f);
  std::set<unsigned> out;
  for (const auto& x : breakpoints_1d(f)) {
    for (const auto& e : classical(f, at(x)).argmax) {
      if (!std::binary_search(dom.begin(), dom.end(), e[0])) out.insert(e[0]);
    }
  }
  return {out.begin(), out.end()};
}

Polynomial full_closure_1d(const Polynomial& f) {
  auto dom = dominating_degrees_1d(f);
  Polynomial out(1);
  if (f.is_neg_inf()) return out;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    unsigned d = dom[k];
    out.add_term({d}, f.coeff({d}));
    if (k + 1 == dom.size()) break;
    unsigned d2 = dom[k + 1];
    Rational c1 = f.coeff({d}).value(), c2 = f.coeff({d2}).value();
    for (unsigned j = d + 1; j < d2; ++j) {
      out.add_term({j}, TropicalNumber::ghost(c1 + (c2 - c1) * (j - d) / (d2 - d)));
    }
  }
  return out;
}

Peeled peel(const Polynomial& full) {
  Peeled out;
  std::vector<Rational> c;  // c[i] is the coefficient of x^(top - i)
  unsigned top = full.leading().first[0];
  for (const auto& [e, v] : full.terms()) c.push_back(v.value());
  out.lower = top - static_cast<unsigned>(c.size() - 1);
  out.lead = c.front();
  for (auto& v : c) v -= out.lead;
  while (c.size() > 1) {
    Rational r = c[1];
    out.roots.push_back(r);
    std::vector<Rational> next(c.begin() + 1, c.end());
    for (auto& v : next) v -= r;
    c = std::move(next);
  }
  return out;
}

std::optional<std::string> comset_mismatch(const Polynomial& f, const ComSet1D& c, const Rational& lo,
                                           const Rational& hi, unsigned per_unit) {
  Rational step(1, per_unit);
  auto check = [&](const TropicalNumber& x) -> std::optional<std::string> {
    bool expect = !root_oracle(f, {x});
    if (c.contains(x) != expect) {
      return format_poly(f) + " at " + x.to_string() + ": oracle says " +
             (expect ? "outside" : "inside") + " the algebraic set";
    }
    return std::nullopt;
  };
  for (Rational x = lo; x <= hi; x += step) {
    if (auto m = check(TropicalNumber::tangible(x))) return m;
    if (auto m = check(TropicalNumber::ghost(x))) return m;
  }
  return check(TropicalNumber::neg_inf());
}

std::pair<Rational, Rational> corner_span(const Polynomial& f, const Rational& margin) {
  auto b = breakpoints_1d(f);
  if (b.empty()) return {-margin, margin};
  return {b.front() - margin, b.back() + margin};
}

namespace {

Rational cross(const Point2& a, const Point2& b) { return a[0] * b[1] - a[1] * b[0]; }
Point2 sub(const Point2& a, const Point2& b) { return {a[0] - b[0], a[1] - b[1]}; }
Rational dot(const Point2& a, const Point2& b) { return a[0] * b[0] + a[1] * b[1]; }

bool on_segment(const Point2& p, const Segment2& s) {
  Point2 d = sub(s.to, s.from), q = sub(p, s.from);
  return cross(d, q) == 0 && dot(q, d) >= 0 && dot(q, d) <= dot(d, d);
}

bool on_ray(const Point2& p, const Ray2& r) {
  Point2 q = sub(p, r.from);
  return cross(r.dir, q) == 0 && dot(q, r.dir) >= 0;
}

std::vector<TropicalNumber> tangible_point(const Point2& p) {
  return {TropicalNumber::tangible(p[0]), TropicalNumber::tangible(p[1])};
}

std::optional<std::string> check_ties(const Polynomial& f, const Point2& p,
                                      const std::vector<Exponent>& tying) {
  auto argmax = classical(f, tangible_point(p)).argmax;
  std::set<Exponent> a(argmax.begin(), argmax.end()), t(tying.begin(), tying.end());
  if (a != t) return "piece through " + point_text(tangible_point(p)) + " lists the wrong tying terms";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> corner_locus_mismatch(const Polynomial& f, const CornerLocus& locus,
                                                 const BBox& bbox, unsigned steps) {
  for (const auto& s : locus.segments) {
    Point2 mid{(s.from[0] + s.to[0]) / 2, (s.from[1] + s.to[1]) / 2};
    if (auto m = check_ties(f, mid, s.tying)) return m;
  }
  for (const auto& r : locus.rays) {
    Point2 p{r.from[0] + r.dir[0], r.from[1] + r.dir[1]};
    if (auto m = check_ties(f, p, r.tying)) return m;
  }
  Rational dx = (bbox.xmax - bbox.xmin) / steps, dy = (bbox.ymax - bbox.ymin) / steps;
  for (unsigned i = 0; i <= steps; ++i) {
    for (unsigned j = 0; j <= steps; ++j) {
      Point2 p{bbox.xmin + dx * i, bbox.ymin + dy * j};
      bool tie = classical(f, tangible_point(p)).argmax.size() > 1;
      bool listed = std::any_of(locus.segments.begin(), locus.segments.end(),
                                [&](const Segment2& s) { return on_segment(p, s); }) ||
                    std::any_of(locus.rays.begin(), locus.rays.end(),
                                [&](const Ray2& r) { return on_ray(p, r); });
      if (tie != listed) {
        return point_text(tangible_point(p)) + (tie ? " is a tie missing from the locus"
                                                    : " is on the locus without a tie");
      }
    }
  }
  return std::nullopt;
}

}  // namespace tropical::testing
