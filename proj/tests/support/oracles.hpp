#pragma once

// Independent reference computations used to check library results.

#include <bit>
#include <vector>

#include "germs/series.hpp"

namespace germs::testing {

inline constexpr int kOracleTrunc = 80;

/// Implicit equation of (t^m, q(t)) for a polynomial q, as the Sylvester
/// resultant Res_s(s^m - x, y - q(s)), expanded by minors over column subsets.
inline BiSeries sylvester_implicit(int m, const UniSeries& q) {
  const int n = std::max(q.degree(), 1);
  const int size = m + n;
  const int N = kOracleTrunc;
  auto bx = BiSeries::x(N), by = BiSeries::y(N);
  // Coefficients of A = s^m - x and B = y - q(s), highest power first.
  std::vector<BiSeries> a(static_cast<std::size_t>(m) + 1, BiSeries(N));
  a[0] = BiSeries::constant(Scalar(1), N);
  a[static_cast<std::size_t>(m)] -= bx;
  std::vector<BiSeries> b(static_cast<std::size_t>(n) + 1, BiSeries(N));
  for (int k = 0; k <= n; ++k) b[static_cast<std::size_t>(n - k)] = BiSeries::constant(-q.coeff(k), N);
  b[static_cast<std::size_t>(n)] += by;

  std::vector<std::vector<BiSeries>> rows;
  for (int r = 0; r < n; ++r) {
    std::vector<BiSeries> row(static_cast<std::size_t>(size), BiSeries(N));
    for (int k = 0; k <= m; ++k) row[static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(k)];
    rows.push_back(std::move(row));
  }
  for (int r = 0; r < m; ++r) {
    std::vector<BiSeries> row(static_cast<std::size_t>(size), BiSeries(N));
    for (int k = 0; k <= n; ++k) row[static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(k)];
    rows.push_back(std::move(row));
  }

  // dp[mask]: signed sum over assignments of the first popcount(mask) rows
  // to the columns in mask.
  std::vector<BiSeries> dp(std::size_t{1} << size, BiSeries(N));
  dp[0] = BiSeries::constant(Scalar(1), N);
  for (unsigned mask = 0; mask < (1u << size); ++mask) {
    if (dp[mask].is_zero()) continue;
    int row = std::popcount(mask);
    if (row == size) continue;
    for (int c = 0; c < size; ++c) {
      if (mask & (1u << c)) continue;
      const BiSeries& e = rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      if (e.is_zero()) continue;
      // Columns already used to the right of c give the inversions.
      int inv = std::popcount(mask >> (c + 1));
      BiSeries term = dp[mask] * e;
      if (inv % 2 == 1) term = -term;
      dp[mask | (1u << c)] += term;
    }
  }
  return dp[(1u << size) - 1];
}

/// ord_t f(x(t), y(t)) computed at the oracle truncation.
inline OrderResult order_along(const BiSeries& f, const UniSeries& xt, const UniSeries& yt) {
  return substitute(f, xt, yt).order();
}

}  // namespace germs::testing
