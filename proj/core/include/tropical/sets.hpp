#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tropical/polynomial.hpp"

namespace tropical {

/// Open interval with optional ends; an absent end is unbounded.
struct OpenInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& x) const;
  bool is_subset_of(const OpenInterval& other) const;
  bool operator==(const OpenInterval& other) const = default;
};

std::optional<OpenInterval> intersect(const OpenInterval& a, const OpenInterval& b);

/// A connected piece of the complement of a univariate tropical algebraic set.
/// The tangible and ghost axes only meet at -inf.
struct Component1D {
  std::optional<OpenInterval> tangible;
  std::optional<OpenInterval> ghost;
  bool contains_neg_infinity = false;

  bool contains(const TropicalNumber& x) const;
  bool is_subset_of(const Component1D& other) const;
  bool empty() const { return !tangible && !ghost && !contains_neg_infinity; }
  bool operator==(const Component1D& other) const = default;
};

struct ComSet1D {
  std::vector<Component1D> components;  // ordered by the lower end of the tangible interval

  bool contains(const TropicalNumber& x) const;
  bool operator==(const ComSet1D& other) const = default;
};

bool zset_contains(const std::vector<Polynomial>& fs, const std::vector<TropicalNumber>& point);

ComSet1D comset1d(const Polynomial& f);
ComSet1D comset_meet(const ComSet1D& a, const ComSet1D& b);
bool comset_leq(const ComSet1D& a, const ComSet1D& b);

struct BBox {
  Rational xmin, ymin, xmax, ymax;
};

using Point2 = std::array<Rational, 2>;

struct Segment2 {
  Point2 from, to;
  std::vector<Exponent> tying;
};

struct Ray2 {
  Point2 from, dir;
  std::vector<Exponent> tying;
};

struct CornerLocus {
  std::vector<Segment2> segments;
  std::vector<Ray2> rays;
  /// Every tangible point is a root (ghost or -inf polynomial).
  bool whole_plane = false;
  /// Exponents of ghost essential terms; the open regions where they dominate are roots too.
  std::vector<Exponent> ghost_regions;
};

/// Tangible corner locus in the plane, clipped to bbox. A piece unbounded on one side is
/// reported as a ray when its origin lies in bbox and as a clipped segment otherwise.
CornerLocus corner_locus_2d(const Polynomial& f, const BBox& bbox);

}  // namespace tropical
