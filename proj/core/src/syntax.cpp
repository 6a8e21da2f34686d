#include "tropical/syntax.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include "tropical/error.hpp"
#include "tropical/essential.hpp"

namespace tropical {

namespace {

constexpr std::size_t kMaxVariableIndex = 256;
constexpr std::size_t kMaxNesting = 200;

enum class Kind { Number, NegInf, Var, Plus, Star, Caret, LParen, RParen, End };

struct Token {
  Kind kind = Kind::End;
  std::size_t pos = 0;
  TropicalNumber num;
  std::string digits;        // set for plain unsigned integers
  std::size_t var = 0;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ == s_.size()) {
        Token end;
        end.pos = i_;
        out.push_back(end);
        return out;
      }
      char c = s_[i_];
      Token t;
      t.pos = i_;
      switch (c) {
        case '+': t.kind = Kind::Plus; ++i_; break;
        case '*': t.kind = Kind::Star; ++i_; break;
        case '^': t.kind = Kind::Caret; ++i_; break;
        case '(': t.kind = Kind::LParen; ++i_; break;
        case ')': t.kind = Kind::RParen; ++i_; break;
        default:
          if (c == '-' || is_digit(c)) {
            number(t);
          } else if (c == 'x' || c == 'y' || c == 'z') {
            variable(t);
          } else {
            throw SyntaxError(i_, {"number", "variable", "\"(\""},
                              std::string("unexpected character '") + printable(c) + "'");
          }
      }
      out.push_back(std::move(t));
    }
  }

  bool letter_mode = false;
  bool numbered_mode = false;

 private:
  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
    return buf;
  }

  std::string digits(const char* what) {
    std::size_t start = i_;
    while (i_ < s_.size() && is_digit(s_[i_])) ++i_;
    if (i_ == start) throw SyntaxError(i_, {"digit"}, std::string("missing digits in ") + what);
    return std::string(s_.substr(start, i_ - start));
  }

  void number(Token& t) {
    bool negative = false;
    if (s_[i_] == '-') {
      if (s_.substr(i_, 4) == "-inf") {
        t.kind = Kind::NegInf;
        i_ += 4;
        return;
      }
      negative = true;
      ++i_;
      if (i_ == s_.size() || !is_digit(s_[i_])) {
        throw SyntaxError(i_, {"digit", "\"inf\""}, "'-' must start a number or -inf");
      }
    }
    std::string whole = digits("number");
    Rational value{mpz_class(whole, 10)};
    bool plain = !negative;
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      std::size_t dpos = i_;
      mpz_class den(digits("denominator"), 10);
      if (den == 0) throw SyntaxError(dpos, {"nonzero denominator"}, "division by zero");
      value = Rational(mpz_class(whole, 10), den);
      value.canonicalize();
      plain = false;
    } else if (i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      std::string frac = digits("decimal fraction");
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      value = Rational(mpz_class(whole + frac, 10), scale);
      value.canonicalize();
      plain = false;
    }
    if (negative) value = -value;
    bool ghost = i_ < s_.size() && s_[i_] == 'v';
    if (ghost) {
      ++i_;
      plain = false;
    }
    t.kind = Kind::Number;
    t.num = ghost ? TropicalNumber::ghost(value) : TropicalNumber::tangible(value);
    if (plain) t.digits = whole;
  }

  void variable(Token& t) {
    t.kind = Kind::Var;
    char c = s_[i_++];
    if (c == 'x' && i_ < s_.size() && is_digit(s_[i_])) {
      std::size_t dpos = i_;
      std::string d = digits("variable index");
      if (d.front() == '0') throw SyntaxError(dpos, {"index 1 or above"}, "variable index starts with 0");
      if (d.size() > 4 || std::stoul(d) > kMaxVariableIndex) {
        throw SyntaxError(dpos, {"index up to " + std::to_string(kMaxVariableIndex)},
                          "variable index too large");
      }
      if (letter_mode) throw SyntaxError(t.pos, {"x, y or z"}, "cannot mix x, y, z with x1..xn");
      numbered_mode = true;
      t.var = std::stoul(d) - 1;
      return;
    }
    if (numbered_mode) throw SyntaxError(t.pos, {"x1..xn"}, "cannot mix x, y, z with x1..xn");
    letter_mode = true;
    t.var = static_cast<std::size_t>(c - 'x');
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t arity, const ParseOptions& opt)
      : toks_(std::move(toks)), arity_(arity), opt_(opt) {}

  Polynomial run() {
    Polynomial p = expr();
    if (peek().kind != Kind::End) {
      throw SyntaxError(peek().pos, {"\"+\"", "\"*\"", "\"^\"", "end of input"}, "unexpected token");
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  const Token& next() {
    const Token& t = toks_[k_];
    if (t.kind != Kind::End) ++k_;
    return t;
  }

  void check_degree(unsigned long d, std::size_t pos) const {
    if (d > opt_.max_degree) {
      throw Error(ErrorCode::DegreeLimitExceeded,
                  "degree " + std::to_string(d) + " exceeds the limit " +
                      std::to_string(opt_.max_degree) + " at position " + std::to_string(pos));
    }
  }

  Polynomial mul(const Polynomial& a, const Polynomial& b, std::size_t pos) const {
    if (a.is_neg_inf() || b.is_neg_inf()) return Polynomial::neg_inf(arity_);
    check_degree(static_cast<unsigned long>(*degree_bounds(a).deg) + *degree_bounds(b).deg, pos);
    if (a.size() * b.size() > opt_.max_terms * 20) {
      throw Error(ErrorCode::DegreeLimitExceeded, "product too large at position " + std::to_string(pos));
    }
    Polynomial r = poly_mul(a, b);
    if (r.size() > opt_.max_terms) {
      throw Error(ErrorCode::DegreeLimitExceeded, "too many terms at position " + std::to_string(pos));
    }
    return r;
  }

  Polynomial expr() {
    Polynomial p = term();
    while (peek().kind == Kind::Plus) {
      next();
      p = poly_add(p, term());
    }
    return p;
  }

  static bool starts_primary(Kind k) {
    return k == Kind::Number || k == Kind::NegInf || k == Kind::Var || k == Kind::LParen;
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      std::size_t pos = peek().pos;
      if (peek().kind == Kind::Star) {
        next();
        p = mul(p, factor(), pos);
      } else if (starts_primary(peek().kind)) {
        p = mul(p, factor(), pos);
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    Polynomial p = primary();
    if (peek().kind != Kind::Caret) return p;
    std::size_t pos = next().pos;
    const Token& e = next();
    if (e.kind != Kind::Number || e.digits.empty()) {
      throw SyntaxError(e.pos, {"unsigned integer"}, "exponent must be an unsigned integer");
    }
    if (e.digits.size() > 9) check_degree(~0ul, e.pos);
    unsigned long k = std::stoul(e.digits);
    if (k == 0) return Polynomial::constant(arity_, TropicalNumber::zero());
    if (p.is_neg_inf()) return p;
    check_degree(static_cast<unsigned long>(*degree_bounds(p).deg) * k, pos);
    Polynomial result = Polynomial::constant(arity_, TropicalNumber::zero());
    Polynomial base = p;
    for (;;) {
      if (k & 1ul) result = mul(result, base, pos);
      k >>= 1ul;
      if (k == 0) break;
      base = mul(base, base, pos);
    }
    return result;
  }

  Polynomial primary() {
    const Token& t = next();
    switch (t.kind) {
      case Kind::Number: return Polynomial::constant(arity_, t.num);
      case Kind::NegInf: return Polynomial::neg_inf(arity_);
      case Kind::Var: return Polynomial::variable(arity_, t.var);
      case Kind::LParen: {
        if (++depth_ > kMaxNesting) throw SyntaxError(t.pos, {"shallower nesting"}, "parentheses nested too deeply");
        Polynomial p = expr();
        if (peek().kind != Kind::RParen) {
          throw SyntaxError(peek().pos, {"\")\"", "\"+\"", "\"*\""}, "unclosed parenthesis");
        }
        next();
        --depth_;
        return p;
      }
      default:
        throw SyntaxError(t.pos, {"number", "variable", "\"(\"", "\"-inf\""},
                          t.kind == Kind::End ? "unexpected end of input" : "unexpected token");
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  std::size_t arity_;
  const ParseOptions& opt_;
  std::size_t depth_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const ParseOptions& options) {
  Lexer lexer(text);
  auto toks = lexer.run();
  std::size_t needed = 1;
  for (const auto& t : toks) {
    if (t.kind == Kind::Var) needed = std::max(needed, t.var + 1);
  }
  std::size_t arity = needed;
  if (options.arity_hint) {
    if (*options.arity_hint == 0) throw Error(ErrorCode::InvalidArgument, "arity must be positive");
    if (needed > *options.arity_hint) {
      throw Error(ErrorCode::ArityMismatch, "expression uses " + std::to_string(needed) +
                                                " variables, arity is " +
                                                std::to_string(*options.arity_hint));
    }
    arity = *options.arity_hint;
  }
  Parser parser(std::move(toks), arity, options);
  Polynomial p = parser.run();
  if (options.reduced && !p.is_neg_inf()) p = full_closure(p);
  return p;
}

std::string variable_name(std::size_t arity, std::size_t index) {
  if (arity <= 3) return std::string(1, static_cast<char>('x' + index));
  return "x" + std::to_string(index + 1);
}

std::string format_poly(const Polynomial& f) {
  if (f.is_neg_inf()) return "-inf";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(f.arity(), i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c == TropicalNumber::zero()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

}  // namespace tropical
