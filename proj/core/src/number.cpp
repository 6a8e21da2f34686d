#include "tropical/number.hpp"

#include <cctype>

#include "tropical/error.hpp"

namespace tropical {

std::strong_ordering compare_extended(const ExtendedReal& a, const ExtendedReal& b) {
  if (!a && !b) return std::strong_ordering::equal;
  if (!a) return std::strong_ordering::less;
  if (!b) return std::strong_ordering::greater;
  int c = cmp(*a, *b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtendedReal add_extended(const ExtendedReal& a, const ExtendedReal& b) {
  if (!a || !b) return std::nullopt;
  return Rational(*a + *b);
}

TropicalNumber TropicalNumber::tangible(Rational v) {
  v.canonicalize();
  return TropicalNumber(Tag::Tangible, std::move(v));
}

TropicalNumber TropicalNumber::ghost(Rational v) {
  v.canonicalize();
  return TropicalNumber(Tag::Ghost, std::move(v));
}

const Rational& TropicalNumber::value() const {
  if (tag_ == Tag::NegInfinity) {
    throw Error(ErrorCode::InvalidArgument, "-inf has no classical value");
  }
  return value_;
}

bool TropicalNumber::operator==(const TropicalNumber& other) const {
  if (tag_ != other.tag_) return false;
  return tag_ == Tag::NegInfinity || value_ == other.value_;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string TropicalNumber::to_string() const {
  switch (tag_) {
    case Tag::NegInfinity: return "-inf";
    case Tag::Tangible: return rational_to_string(value_);
    case Tag::Ghost: return rational_to_string(value_) + "v";
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const TropicalNumber& a) { return os << a.to_string(); }

std::strong_ordering compare(const TropicalNumber& a, const TropicalNumber& b) {
  if (auto c = compare_extended(project(a), project(b)); c != 0) return c;
  if (a.tag() == b.tag()) return std::strong_ordering::equal;
  return a.is_tangible() ? std::strong_ordering::less : std::strong_ordering::greater;
}

TropicalNumber trop_add(const TropicalNumber& a, const TropicalNumber& b) {
  auto c = compare(a, b);
  if (c == 0) return ghost_of(a);
  return c > 0 ? a : b;
}

TropicalNumber trop_mul(const TropicalNumber& a, const TropicalNumber& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropicalNumber::neg_inf();
  Rational v = a.value() + b.value();
  if (a.is_ghost() || b.is_ghost()) return TropicalNumber::ghost(std::move(v));
  return TropicalNumber::tangible(std::move(v));
}

TropicalNumber trop_inv(const TropicalNumber& a) {
  if (a.is_neg_inf()) throw Error(ErrorCode::InversionOfNegInfinity, "-inf has no inverse");
  Rational v = -a.value();
  return a.is_ghost() ? TropicalNumber::ghost(std::move(v)) : TropicalNumber::tangible(std::move(v));
}

TropicalNumber trop_div(const TropicalNumber& a, const TropicalNumber& b) {
  return trop_mul(a, trop_inv(b));
}

TropicalNumber ghost_of(const TropicalNumber& a) {
  if (a.is_tangible()) return TropicalNumber::ghost(a.value());
  return a;
}

ExtendedReal project(const TropicalNumber& a) {
  if (a.is_neg_inf()) return std::nullopt;
  return a.value();
}

TropicalNumber trop_pow(const TropicalNumber& a, unsigned long k) {
  if (k == 0) return TropicalNumber::zero();
  if (a.is_neg_inf()) return a;
  Rational v = a.value() * k;
  return a.is_ghost() ? TropicalNumber::ghost(std::move(v)) : TropicalNumber::tangible(std::move(v));
}

TropicalNumber trop_root(const TropicalNumber& a, unsigned long k) {
  if (a.is_neg_inf()) throw Error(ErrorCode::RootOfNegInfinity, "-inf has no root");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  Rational v = a.value() / k;
  return a.is_ghost() ? TropicalNumber::ghost(std::move(v)) : TropicalNumber::tangible(std::move(v));
}

TropicalNumber from_extended(const ExtendedReal& v, Tag tag) {
  if (!v || tag == Tag::NegInfinity) return TropicalNumber::neg_inf();
  return tag == Tag::Ghost ? TropicalNumber::ghost(*v) : TropicalNumber::tangible(*v);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<TropicalNumber> parse_number(const std::string& text) {
  if (text == "-inf") return TropicalNumber::neg_inf();
  std::string s = text;
  bool ghost = false;
  if (!s.empty() && s.back() == 'v') {
    ghost = true;
    s.pop_back();
  }
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.erase(s.begin());
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den, 10);
    if (d == 0) return std::nullopt;
    value = Rational(mpz_class(num, 10), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(mpz_class(whole + frac, 10), scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = Rational(mpz_class(s, 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return ghost ? TropicalNumber::ghost(value) : TropicalNumber::tangible(value);
}

}  // namespace tropical
