#include "tropical/json.hpp"

#include "tropical/error.hpp"
#include "tropical/syntax.hpp"

namespace tropical {

using nlohmann::json;

json to_json(const TropicalNumber& a) {
  switch (a.tag()) {
    case Tag::NegInfinity: return {{"tag", "ninf"}};
    case Tag::Tangible: return {{"tag", "t"}, {"value", rational_to_string(a.value())}};
    case Tag::Ghost: return {{"tag", "g"}, {"value", rational_to_string(a.value())}};
  }
  return {};
}

TropicalNumber number_from_json(const json& j) {
  try {
    const std::string tag = j.at("tag").get<std::string>();
    if (tag == "ninf") return TropicalNumber::neg_inf();
    if (tag != "t" && tag != "g") throw Error(ErrorCode::InvalidArgument, "unknown tag " + tag);
    auto v = parse_number(j.at("value").get<std::string>());
    if (!v || !v->is_tangible()) throw Error(ErrorCode::InvalidArgument, "malformed rational value");
    return tag == "g" ? ghost_of(*v) : *v;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed number JSON: ") + e.what());
  }
}

json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"arity", f.arity()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  try {
    Polynomial p(j.at("arity").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
      p.add_term(t.at("exp").get<Exponent>(), number_from_json(t.at("coeff")));
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
  }
}

json to_json(const EssentialComplex& ec) {
  json terms = json::array();
  for (const auto& t : ec.terms) {
    terms.push_back({{"exp", t.exp},
                     {"coeff", to_json(t.coeff)},
                     {"height", rational_to_string(t.height)},
                     {"class", to_string(t.cls)},
                     {"interior_vertex", t.interior_vertex}});
  }
  json lattice = json::array();
  for (const auto& h : ec.hull_lattice_points) {
    lattice.push_back({{"exp", h.exp}, {"height", rational_to_string(h.height)}, {"vertex", h.vertex}});
  }
  json out = {{"arity", ec.arity}, {"terms", terms}, {"hull_lattice_points", lattice}};
  out["subdivision"] = ec.subdivision ? json(*ec.subdivision) : json(nullptr);
  return out;
}

json to_json(const Factorization& fz) {
  json factors = json::array();
  for (const auto& f : fz.factors) {
    factors.push_back({{"kind", to_string(f.kind)},
                       {"text", format_poly(f.poly)},
                       {"poly", to_json(f.poly)},
                       {"multiplicity", f.multiplicity}});
  }
  return {{"unit", to_json(fz.unit)}, {"factors", factors}, {"certified", fz.certified}};
}

namespace {

json interval_json(const std::optional<OpenInterval>& iv) {
  if (!iv) return nullptr;
  return {{"lo", iv->lo ? json(rational_to_string(*iv->lo)) : json("-inf")},
          {"hi", iv->hi ? json(rational_to_string(*iv->hi)) : json("inf")}};
}

json point_json(const Point2& p) { return {p[0].get_d(), p[1].get_d()}; }

}  // namespace

json to_json(const ComSet1D& c) {
  json comps = json::array();
  for (const auto& d : c.components) {
    comps.push_back({{"tangible", interval_json(d.tangible)},
                     {"ghost", interval_json(d.ghost)},
                     {"contains_neg_inf", d.contains_neg_infinity}});
  }
  return {{"components", comps}};
}

json to_json(const CornerLocus& locus) {
  json segs = json::array(), rays = json::array(), ghosts = json::array();
  for (const auto& s : locus.segments) {
    segs.push_back({{"from", point_json(s.from)}, {"to", point_json(s.to)}, {"tying", s.tying}});
  }
  for (const auto& r : locus.rays) {
    rays.push_back({{"from", point_json(r.from)}, {"dir", point_json(r.dir)}, {"tying", r.tying}});
  }
  for (const auto& e : locus.ghost_regions) ghosts.push_back(e);
  return {{"segments", segs}, {"rays", rays}, {"whole_plane", locus.whole_plane}, {"ghost_regions", ghosts}};
}

json to_json(const RadicalCertificate& cert) {
  json hs = json::array();
  for (const auto& h : cert.combiners) hs.push_back(format_poly(h));
  return {{"m", cert.m}, {"combiners", hs}};
}

}  // namespace tropical
