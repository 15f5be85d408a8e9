#include "germ/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "germ/errors.hpp"

namespace germ {

std::size_t rat_rank(RatMat a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rat factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<RatRow> rat_nullspace(const RatMat& a) {
  if (a.empty()) return {};
  std::size_t rows = a.size(), cols = a[0].size();
  RatMat m = a;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Rat inv = 1 / m[rank][col];
    for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<RatRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatRow v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Int int_det(std::vector<std::vector<Int>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

std::vector<Int> primitive_integer_direction(const RatRow& v) {
  Int scale = 1;
  for (const Rat& q : v) scale = lcm(scale, q.get_den());
  std::vector<Int> w;
  w.reserve(v.size());
  Int content = 0;
  for (const Rat& q : v) {
    Rat s = q * Rat(scale);
    w.push_back(s.get_num());
    content = gcd(content, w.back());
  }
  if (content == 0) return w;  // zero vector
  for (Int& x : w) x /= content;
  return w;
}

namespace {

// Full-tableau simplex, minimization, Bland's rule. Small and exact.
class SimplexTableau {
 public:
  // rows: [A | b] with b >= 0; basis: initial basic variable per row
  // (must be an identity submatrix); cost: objective coefficients.
  SimplexTableau(RatMat rows, std::vector<std::size_t> basis, RatRow cost)
      : t_(std::move(rows)), basis_(std::move(basis)), cost_(std::move(cost)) {}

  // Returns the optimal objective value.
  Rat minimize() {
    const std::size_t rows = t_.size();
    const std::size_t cols = cost_.size();  // excludes rhs column
    for (;;) {
      // Reduced costs relative to the current basis.
      RatRow y(rows);
      for (std::size_t r = 0; r < rows; ++r) y[r] = cost_[basis_[r]];
      std::size_t entering = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        Rat reduced = cost_[j];
        for (std::size_t r = 0; r < rows; ++r) reduced -= y[r] * t_[r][j];
        if (reduced < 0) {  // Bland: first improving index
          entering = j;
          break;
        }
      }
      if (entering == cols) break;
      std::size_t leaving = rows;
      Rat best_ratio;
      for (std::size_t r = 0; r < rows; ++r) {
        if (t_[r][entering] <= 0) continue;
        Rat ratio = t_[r][cols] / t_[r][entering];
        if (leaving == rows || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows)
        throw InternalInconsistencyError("unbounded feasibility LP");
      pivot(leaving, entering);
    }
    Rat value = 0;
    const std::size_t cols_rhs = cost_.size();
    for (std::size_t r = 0; r < rows; ++r)
      value += cost_[basis_[r]] * t_[r][cols_rhs];
    return value;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    Rat inv = 1 / t_[row][col];
    for (Rat& x : t_[row]) x *= inv;
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == row || t_[r][col] == 0) continue;
      Rat factor = t_[r][col];
      for (std::size_t c = 0; c < t_[r].size(); ++c)
        t_[r][c] -= factor * t_[row][c];
    }
    basis_[row] = col;
  }

  RatMat t_;
  std::vector<std::size_t> basis_;
  RatRow cost_;
};

}  // namespace

bool in_convex_hull_plus_orthant(
    const std::vector<Rat>& point,
    const std::vector<std::vector<Rat>>& generators) {
  const std::size_t n = point.size();
  const std::size_t k = generators.size();
  if (k == 0) return false;
  // Variables: lambda_0..k-1, slack_0..n-1, artificial t.
  // sum lambda_j gen_j + slack = point ; sum lambda + t = 1 ; minimize t.
  const std::size_t cols = k + n + 1;
  RatMat rows(n + 1, RatRow(cols + 1, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = generators[j][i];
    rows[i][k + i] = 1;
    rows[i][cols] = point[i];
  }
  for (std::size_t j = 0; j < k; ++j) rows[n][j] = 1;
  rows[n][k + n] = 1;
  rows[n][cols] = 1;
  std::vector<std::size_t> basis(n + 1);
  for (std::size_t i = 0; i < n; ++i) basis[i] = k + i;
  basis[n] = k + n;
  RatRow cost(cols, Rat(0));
  cost[k + n] = 1;
  SimplexTableau lp(std::move(rows), std::move(basis), std::move(cost));
  return lp.minimize() == 0;
}

}  // namespace germ
