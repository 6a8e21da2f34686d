#include "tropical/lp.hpp"

#include <cstddef>

#include "tropical/error.hpp"

namespace tropical::lp {

namespace {

using Row = std::vector<Rational>;

// Dense tableau. Row i < m holds constraint i with rhs in the last column;
// basis[i] names its basic variable.
struct Tableau {
  std::vector<Row> rows;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // number of variables, rhs is at index cols

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    basis[r] = c;
  }

  // Maximizes obj·x over the allowed columns. Returns false when unbounded.
  bool optimize(const Row& obj, const std::vector<bool>& allowed) {
    const std::size_t m = rows.size();
    for (;;) {
      // Reduced cost of column j: obj_j - sum_i obj_{basis i} * rows[i][j].
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols && enter == cols; ++j) {
        if (!allowed[j]) continue;
        Rational rc = obj[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (rows[i][j] != 0) rc -= obj[basis[i]] * rows[i][j];
        }
        if (rc > 0) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorCode::InvalidArgument, "lp: row count mismatch");

  // Phase one: artificial variables n..n+m-1 start basic.
  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, Row(t.cols + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw Error(ErrorCode::InvalidArgument, "lp: column count mismatch");
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.cols] = flip ? Rational(-b[i]) : b[i];
    t.basis[i] = n + i;
  }
  Row phase1(t.cols);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  std::vector<bool> all(t.cols, true);
  t.optimize(phase1, all);

  Result res;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= n && t.rows[i][t.cols] != 0) return res;
  }
  // Drive remaining zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  Row obj(t.cols);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  std::vector<bool> allowed(t.cols, false);
  for (std::size_t j = 0; j < n; ++j) allowed[j] = true;
  if (!t.optimize(obj, allowed)) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rows[i][t.cols];
  }
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

Result hull_height(const std::vector<std::vector<Rational>>& points,
                   const std::vector<Rational>& heights, const std::vector<Rational>& target) {
  const std::size_t k = points.size();
  const std::size_t d = target.size();
  std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(k));
  std::vector<Rational> b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < k; ++j) A[r][j] = points[j][r];
    b[r] = target[r];
  }
  for (std::size_t j = 0; j < k; ++j) A[d][j] = 1;
  b[d] = 1;
  return maximize(A, b, heights);
}

bool in_convex_hull(const std::vector<std::vector<Rational>>& points,
                    const std::vector<Rational>& target) {
  if (points.empty()) return false;
  return hull_height(points, std::vector<Rational>(points.size(), 0), target).status ==
         Status::Optimal;
}

}  // namespace tropical::lp
