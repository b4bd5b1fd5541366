#pragma once

#include <optional>
#include <vector>

#include "sasakicone/errors.hpp"
#include "sasakicone/rational.hpp"

namespace sasakicone {

using Matrix = std::vector<std::vector<Rational>>;

/// Result of an exact Gauss-Jordan elimination of A·x = b.
struct LinearSolveResult {
  int rank = 0;
  bool consistent = true;    // no row reduced to 0 = nonzero
  std::vector<Rational> x;   // one solution (free variables set to zero) when consistent
  bool unique() const { return consistent && rank == static_cast<int>(x.size()); }
};

/// Exact elimination over all rows; an overdetermined system is solved on a
/// maximal independent subset and the remaining rows are checked exactly.
inline LinearSolveResult solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw DomainError("right-hand side length mismatch");
  LinearSolveResult res;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const Rational inv = a[r][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  res.rank = static_cast<int>(r);
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) res.consistent = false;
  res.x.assign(cols, Rational(0));
  if (res.consistent)
    for (std::size_t i = 0; i < r; ++i) res.x[pivot_cols[i]] = b[i];
  return res;
}

inline Rational determinant2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return a * d - b * c;
}

}  // namespace sasakicone
