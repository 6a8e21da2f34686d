#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "tropical/error.hpp"
#include "tropical/essential.hpp"
#include "tropical/ideals.hpp"
#include "tropical/json.hpp"
#include "tropical/sets.hpp"
#include "tropical/syntax.hpp"
#include "tropical/univariate.hpp"

namespace tropical::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  unsigned max_degree = 1000;
  bool reduced = false;
  std::size_t arity = 0;  // 0 means infer
};

class Session {
 public:
  Session(const Globals& g, std::istream& in, std::ostream& out) : g_(g), in_(in), out_(out) {}

  std::string text_of(const std::string& arg) {
    if (arg != "-") return arg;
    if (!stdin_text_) {
      stdin_text_ = std::string(std::istreambuf_iterator<char>(in_), {});
      while (!stdin_text_->empty() && (stdin_text_->back() == '\n' || stdin_text_->back() == '\r')) {
        stdin_text_->pop_back();
      }
    }
    return *stdin_text_;
  }

  Polynomial poly(const std::string& arg, std::optional<std::size_t> hint = std::nullopt) {
    ParseOptions opt;
    opt.max_degree = g_.max_degree;
    opt.reduced = g_.reduced;
    if (hint) {
      opt.arity_hint = hint;
    } else if (g_.arity > 0) {
      opt.arity_hint = g_.arity;
    }
    return parse_poly(text_of(arg), opt);
  }

  // Parses a ';'-separated family with a common arity.
  std::vector<Polynomial> family(const std::string& arg) {
    std::string text = text_of(arg);
    std::vector<std::pair<std::size_t, std::string>> pieces;
    std::size_t start = 0;
    for (;;) {
      std::size_t semi = text.find(';', start);
      pieces.emplace_back(start, text.substr(start, semi == std::string::npos ? semi : semi - start));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    auto parse_all = [&](std::optional<std::size_t> hint) {
      std::vector<Polynomial> out;
      for (const auto& [offset, piece] : pieces) {
        try {
          out.push_back(poly(piece, hint));
        } catch (const SyntaxError& e) {
          throw SyntaxError(offset + e.position(), e.expected(), "in list element");
        }
      }
      return out;
    };
    auto first = parse_all(std::nullopt);
    std::size_t arity = 1;
    for (const auto& p : first) arity = std::max(arity, p.arity());
    return parse_all(arity);
  }

  void emit(json j) {
    j["schema"] = kJsonSchema;
    out_ << j.dump(2) << "\n";
  }

  const Globals& globals() const { return g_; }
  std::ostream& out() { return out_; }

 private:
  const Globals& g_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<std::string> stdin_text_;
};

std::string point_text(const std::vector<TropicalNumber>& p) {
  if (p.size() == 1) return p.front().to_string();
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
  return s + ")";
}

json point_json(const std::vector<TropicalNumber>& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(to_json(x));
  return a;
}

std::vector<TropicalNumber> parse_point(const std::string& text) {
  std::vector<TropicalNumber> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t lead = item.find_first_not_of(' ');
    std::size_t trail = item.find_last_not_of(' ');
    std::string trimmed = lead == std::string::npos ? "" : item.substr(lead, trail - lead + 1);
    auto v = parse_number(trimmed);
    if (!v) {
      throw SyntaxError(start + (lead == std::string::npos ? 0 : lead), {"number", "\"-inf\""},
                        "malformed coordinate in --at");
    }
    out.push_back(*v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

BBox parse_bbox(const std::string& text) {
  auto parts = parse_point(text);
  if (parts.size() != 4) {
    throw SyntaxError(0, {"xmin,ymin,xmax,ymax"}, "--bbox needs four numbers");
  }
  for (const auto& p : parts) {
    if (!p.is_tangible()) throw SyntaxError(0, {"tangible number"}, "--bbox entries must be tangible");
  }
  BBox b{parts[0].value(), parts[1].value(), parts[2].value(), parts[3].value()};
  if (b.xmin > b.xmax || b.ymin > b.ymax) throw Error(ErrorCode::InvalidArgument, "--bbox is empty");
  return b;
}

std::string interval_text(const OpenInterval& iv) {
  return "(" + (iv.lo ? rational_to_string(*iv.lo) : std::string("-inf")) + ", " +
         (iv.hi ? rational_to_string(*iv.hi) : std::string("inf")) + ")";
}

std::string factor_text(const Factor& f) {
  std::string s = "(" + format_poly(f.poly) + ")";
  if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the extended tropical semiring", "tropc"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--seed", g.seed, "Seed for sampled verification");
  app.add_option("--max-degree", g.max_degree, "Largest degree accepted while parsing");
  app.add_flag("--reduced", g.reduced, "Full-close parsed expressions");
  app.add_option("--arity", g.arity, "Number of variables (inferred when omitted)");

  std::function<void(Session&)> action;
  std::string p1, p2, at, bbox, gens, fpoly;

  auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form of a polynomial");
  parse_cmd->add_option("poly", p1)->required();
  parse_cmd->callback([&] {
    action = [&](Session& s) {
      auto f = s.poly(p1);
      if (s.globals().json) {
        s.emit({{"text", format_poly(f)}, {"poly", to_json(f)}});
      } else {
        s.out() << format_poly(f) << "\n";
      }
    };
  });

  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a point");
  eval->add_option("poly", p1)->required();
  eval->add_option("--at", at, "Comma-separated coordinates")->required();
  eval->callback([&] {
    action = [&](Session& s) {
      auto point = parse_point(at);
      auto f = s.poly(p1, point.size());
      auto v = evaluate(f, point);
      if (s.globals().json) {
        s.emit({{"value", to_json(v)}, {"root", !v.is_tangible()}});
      } else {
        s.out() << v << "\n";
      }
    };
  });

  auto* ess = app.add_subcommand("essential", "Essential part and term classification");
  ess->add_option("poly", p1)->required();
  ess->callback([&] {
    action = [&](Session& s) {
      auto f = s.poly(p1);
      auto ec = classify_monomials(f);
      auto fe = essential_part(f);
      if (s.globals().json) {
        s.emit({{"essential_part", format_poly(fe)}, {"complex", to_json(ec)}});
        return;
      }
      s.out() << "essential part: " << format_poly(fe) << "\n";
      for (const auto& t : ec.terms) {
        s.out() << "  " << format_poly(Polynomial::monomial(t.exp, t.coeff)) << ": " << to_string(t.cls)
                << (t.interior_vertex ? " (interior vertex)" : "") << "\n";
      }
    };
  });

  auto* full = app.add_subcommand("full", "Full closure");
  full->add_option("poly", p1)->required();
  full->callback([&] {
    action = [&](Session& s) {
      auto f = full_closure(s.poly(p1));
      if (s.globals().json) {
        s.emit({{"text", format_poly(f)}, {"poly", to_json(f)}});
      } else {
        s.out() << format_poly(f) << "\n";
      }
    };
  });

  auto* equiv = app.add_subcommand("equiv", "Decide functional equivalence");
  equiv->add_option("p", p1)->required();
  equiv->add_option("q", p2)->required();
  equiv->callback([&] {
    action = [&](Session& s) {
      auto f = s.poly(p1), h = s.poly(p2);
      std::size_t n = std::max(f.arity(), h.arity());
      bool eq = equivalent(s.poly(p1, n), s.poly(p2, n));
      if (s.globals().json) {
        s.emit({{"equivalent", eq}});
      } else {
        s.out() << "equivalent: " << (eq ? "true" : "false") << "\n";
      }
    };
  });

  auto* subdiv = app.add_subcommand("subdivision", "Cells of the induced Newton subdivision");
  subdiv->add_option("poly", p1)->required();
  subdiv->callback([&] {
    action = [&](Session& s) {
      auto f = s.poly(p1);
      auto ec = classify_monomials(f);
      if (!ec.subdivision) throw Error(ErrorCode::ArityUnsupported, "subdivision is computed for arity 1 and 2");
      if (s.globals().json) {
        s.emit({{"cells", *ec.subdivision}});
        return;
      }
      for (const auto& cell : *ec.subdivision) {
        s.out() << "cell:";
        for (const auto& e : cell) {
          s.out() << " " << format_poly(Polynomial::monomial(e, TropicalNumber::zero()));
        }
        s.out() << "\n";
      }
    };
  });

  auto* factor = app.add_subcommand("factor", "Canonical factorization of a univariate polynomial");
  factor->add_option("poly", p1)->required();
  factor->callback([&] {
    action = [&](Session& s) {
      auto fz = factor_full(s.poly(p1));
      if (s.globals().json) {
        s.emit(to_json(fz));
        return;
      }
      s.out() << "unit: " << fz.unit << "\nfactors: ";
      for (const auto& f : fz.factors) s.out() << factor_text(f);
      if (fz.factors.empty()) s.out() << "(none)";
      s.out() << "\ncertified: " << (fz.certified ? "true" : "false") << "\n";
    };
  });

  auto* roots = app.add_subcommand("roots", "Roots with multiplicity of a tangible-full polynomial");
  roots->add_option("poly", p1)->required();
  roots->callback([&] {
    action = [&](Session& s) {
      auto rs = roots_with_multiplicity(s.poly(p1));
      if (s.globals().json) {
        json a = json::array();
        for (const auto& [r, m] : rs) a.push_back({{"root", to_json(r)}, {"multiplicity", m}});
        s.emit({{"roots", a}});
        return;
      }
      for (const auto& [r, m] : rs) s.out() << r << " (multiplicity " << m << ")\n";
    };
  });

  auto* common = app.add_subcommand("common-root", "A common root of a ';'-separated family");
  common->add_option("polys", p1)->required();
  common->callback([&] {
    action = [&](Session& s) {
      auto fs = s.family(p1);
      auto r = common_root(fs);
      if (s.globals().json) {
        s.emit({{"point", point_json(r)}});
      } else {
        s.out() << point_text(r) << "\n";
      }
    };
  });

  auto* comset = app.add_subcommand("comset", "Components of the complement of the root set");
  comset->add_option("poly", p1)->required();
  comset->callback([&] {
    action = [&](Session& s) {
      auto c = comset1d(s.poly(p1));
      if (s.globals().json) {
        s.emit(to_json(c));
        return;
      }
      if (c.components.empty()) s.out() << "empty\n";
      for (const auto& d : c.components) {
        s.out() << "component:";
        if (d.tangible) s.out() << " tangible " << interval_text(*d.tangible);
        if (d.ghost) s.out() << " ghost " << interval_text(*d.ghost);
        if (d.contains_neg_infinity) s.out() << " with -inf";
        s.out() << "\n";
      }
    };
  });

  auto* curve = app.add_subcommand("curve2d", "Corner locus of a bivariate polynomial as JSON");
  curve->add_option("poly", p1)->required();
  curve->add_option("--bbox", bbox, "xmin,ymin,xmax,ymax")->required();
  curve->callback([&] {
    action = [&](Session& s) {
      auto box = parse_bbox(bbox);
      s.emit(to_json(corner_locus_2d(s.poly(p1, 2), box)));
    };
  });

  auto* nss = app.add_subcommand("nss", "Weak Nullstellensatz: common root or proof of emptiness");
  nss->add_option("--gens", gens, "';'-separated generators")->required();
  nss->callback([&] {
    action = [&](Session& s) {
      auto fs = s.family(gens);
      Ideal ideal(fs.front().arity(), fs);
      auto res = weak_nullstellensatz(ideal);
      if (auto* w = std::get_if<Witness>(&res)) {
        if (s.globals().json) {
          s.emit({{"proper", true}, {"witness", point_json(w->point)}});
        } else {
          s.out() << "witness: " << point_text(w->point) << "\n";
        }
      } else {
        const auto& proof = std::get<EmptinessProof>(res);
        if (s.globals().json) {
          s.emit({{"proper", false}, {"tangible_constant", format_poly(proof.generator)}});
        } else {
          s.out() << "empty: generator " << format_poly(proof.generator) << " is a tangible constant\n";
        }
      }
    };
  });

  auto* radical = app.add_subcommand("radical-member", "Radical membership with certificate (univariate)");
  radical->add_option("--f", fpoly, "Polynomial")->required();
  radical->add_option("--gens", gens, "';'-separated generators")->required();
  radical->callback([&] {
    action = [&](Session& s) {
      auto f = s.poly(fpoly);
      auto fs = s.family(gens);
      Ideal ideal(fs.front().arity(), fs);
      auto cert = radical_member_1d(f, ideal);
      std::size_t checked = 0;
      if (cert) {
        // Extra seeded spot checks on top of the built-in grid.
        Polynomial lhs = red_pow(f, cert->m);
        Polynomial rhs(1);
        for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
          rhs = poly_add(rhs, poly_mul(cert->combiners[j], ideal.generators()[j]));
        }
        std::mt19937_64 rng(s.globals().seed);
        std::uniform_int_distribution<int> num(-4000, 4000);
        for (; checked < 100; ++checked) {
          Rational x(num(rng), 100);
          x.canonicalize();
          for (const auto& pt : {TropicalNumber::tangible(x), TropicalNumber::ghost(x)}) {
            if (evaluate(lhs, {pt}) != evaluate(rhs, {pt})) {
              throw Error(ErrorCode::InternalInconsistency, "certificate fails at " + pt.to_string());
            }
          }
        }
      }
      if (s.globals().json) {
        json j = {{"member", cert.has_value()}};
        if (cert) {
          j["certificate"] = to_json(*cert);
          j["spot_checks"] = checked;
        }
        s.emit(j);
        return;
      }
      s.out() << "member: " << (cert ? "true" : "false") << "\n";
      if (cert) {
        s.out() << "m: " << cert->m << "\n";
        for (std::size_t j = 0; j < cert->combiners.size(); ++j) {
          s.out() << "h" << j + 1 << ": " << format_poly(cert->combiners[j]) << "\n";
        }
      }
    };
  });

  auto* potent = app.add_subcommand("ghost-potent", "Whether some power is a ghost polynomial");
  potent->add_option("poly", p1)->required();
  potent->callback([&] {
    action = [&](Session& s) {
      bool gp = is_ghost_potent(s.poly(p1));
      if (s.globals().json) {
        s.emit({{"ghost_potent", gp}});
      } else {
        s.out() << "ghost-potent: " << (gp ? "true" : "false") << "\n";
      }
    };
  });

  std::vector<const char*> argv{"tropc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << "\n";
    return 2;
  }

  Session session(g, in, out);
  try {
    if (action) action(session);
    return 0;
  } catch (const SyntaxError& e) {
    err << "error: SyntaxError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tropical::cli
