#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace tropical {

using Rational = mpq_class;

/// A real number or -inf (nullopt). Used for projected values.
using ExtendedReal = std::optional<Rational>;

std::strong_ordering compare_extended(const ExtendedReal& a, const ExtendedReal& b);
ExtendedReal add_extended(const ExtendedReal& a, const ExtendedReal& b);

enum class Tag { NegInfinity, Tangible, Ghost };

class TropicalNumber {
 public:
  /// Default constructs -inf, the additive unit.
  TropicalNumber() = default;

  static TropicalNumber tangible(Rational v);
  static TropicalNumber ghost(Rational v);
  static TropicalNumber neg_inf() { return {}; }
  static TropicalNumber zero() { return tangible(0); }

  Tag tag() const noexcept { return tag_; }
  bool is_neg_inf() const noexcept { return tag_ == Tag::NegInfinity; }
  bool is_tangible() const noexcept { return tag_ == Tag::Tangible; }
  bool is_ghost() const noexcept { return tag_ == Tag::Ghost; }
  /// Ghost or -inf, i.e. a value in the ghost ideal.
  bool is_ghost_or_neg_inf() const noexcept { return tag_ != Tag::Tangible; }

  /// Classical value. Must not be called on -inf.
  const Rational& value() const;

  bool operator==(const TropicalNumber& other) const;

  std::string to_string() const;

 private:
  TropicalNumber(Tag tag, Rational v) : tag_(tag), value_(std::move(v)) {}

  Tag tag_ = Tag::NegInfinity;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const TropicalNumber& a);

TropicalNumber trop_add(const TropicalNumber& a, const TropicalNumber& b);
TropicalNumber trop_mul(const TropicalNumber& a, const TropicalNumber& b);
TropicalNumber trop_inv(const TropicalNumber& a);
TropicalNumber ghost_of(const TropicalNumber& a);
ExtendedReal project(const TropicalNumber& a);
std::strong_ordering compare(const TropicalNumber& a, const TropicalNumber& b);
TropicalNumber trop_pow(const TropicalNumber& a, unsigned long k);
TropicalNumber trop_root(const TropicalNumber& a, unsigned long k);

/// a / b in the semiring, i.e. a ⊙ b⁻¹.
TropicalNumber trop_div(const TropicalNumber& a, const TropicalNumber& b);

/// Tagged element built from a projected value, -inf when the value is absent.
TropicalNumber from_extended(const ExtendedReal& v, Tag tag);

inline TropicalNumber operator+(const TropicalNumber& a, const TropicalNumber& b) {
  return trop_add(a, b);
}
inline TropicalNumber operator*(const TropicalNumber& a, const TropicalNumber& b) {
  return trop_mul(a, b);
}

/// Parses "3", "-5/2", "1.25", "3v", "-inf". Returns nullopt on malformed text.
std::optional<TropicalNumber> parse_number(const std::string& text);

/// Canonical text for a rational: "3", "-5/2".
std::string rational_to_string(const Rational& r);

}  // namespace tropical
