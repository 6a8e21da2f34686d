#pragma once

#include <vector>

#include "tropical/number.hpp"

namespace tropical::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Maximizes c·x subject to A x = b, x >= 0, in exact arithmetic.
/// Two-phase simplex with Bland's rule, so it always terminates.
Result maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                const std::vector<Rational>& c);

/// Best height reachable at `target` by convex combinations of the lifted points
/// (points[i], heights[i]). Infeasible when target lies outside their convex hull.
Result hull_height(const std::vector<std::vector<Rational>>& points,
                   const std::vector<Rational>& heights, const std::vector<Rational>& target);

/// True if target is a convex combination of points.
bool in_convex_hull(const std::vector<std::vector<Rational>>& points,
                    const std::vector<Rational>& target);

}  // namespace tropical::lp
