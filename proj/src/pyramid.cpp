#include "handsaw/pyramid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace handsaw {

Pyramid pyramid_from_columns(const std::vector<int>& columns) {
  if (columns.empty()) throw std::invalid_argument("pyramid: no columns");
  for (int q : columns)
    if (q <= 0) throw std::invalid_argument("pyramid: column heights must be positive");

  const int l = static_cast<int>(columns.size());
  // Longest weakly increasing prefix ends at a; weakly decreasing suffix
  // starts at b. A pivot k works iff b-1 <= k <= a.
  int a = 1;
  while (a < l && columns[a - 1] <= columns[a]) ++a;
  int b = l;
  while (b > 1 && columns[b - 2] >= columns[b - 1]) --b;
  if (b - 1 > a) throw std::invalid_argument("pyramid: columns are not unimodal");

  Pyramid p;
  p.columns = columns;
  p.pivot = std::max(1, b - 1);
  p.n = *std::max_element(columns.begin(), columns.end());
  p.rows.resize(p.n);
  for (int i = 1; i <= p.n; ++i)
    p.rows[i - 1] =
        static_cast<int>(std::count_if(columns.begin(), columns.end(),
                                       [&](int q) { return q >= p.n - i + 1; }));
  p.boxes = std::accumulate(columns.begin(), columns.end(), 0LL);
  return p;
}

ShiftMatrix shift_matrix(const Pyramid& p) {
  ShiftMatrix sigma;
  sigma.n = p.n;
  sigma.s.assign(p.n, std::vector<int>(p.n, 0));
  std::vector<int> lower(p.n, 0), upper(p.n, 0);  // index i-1 holds s_{i+1,i} / s_{i,i+1}
  for (int c = 1; c <= p.level(); ++c) {
    int i = p.n - p.columns[c - 1];
    if (i == 0) continue;  // full-height column
    if (c <= p.pivot)
      ++lower[i - 1];
    else
      ++upper[i - 1];
  }
  // Fill the rest by additivity along the diagonals.
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j) {
      if (i > j)
        for (int m = j; m < i; ++m) sigma.s[i - 1][j - 1] += lower[m - 1];
      else if (i < j)
        for (int m = i; m < j; ++m) sigma.s[i - 1][j - 1] += upper[m - 1];
    }
  return sigma;
}

namespace {

void check_shift_matrix(const ShiftMatrix& sigma) {
  const int n = sigma.n;
  if (n <= 0 || static_cast<int>(sigma.s.size()) != n)
    throw std::invalid_argument("shift matrix: bad shape");
  for (const auto& row : sigma.s)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("shift matrix: bad shape");
  for (int i = 0; i < n; ++i)
    if (sigma.s[i][i] != 0) throw std::invalid_argument("shift matrix: nonzero diagonal");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sigma.s[i][j] < 0) throw std::invalid_argument("shift matrix: negative entry");
      // Additivity through every intermediate index.
      int lo = std::min(i, j), hi = std::max(i, j);
      for (int k = lo; k <= hi; ++k)
        if (sigma.s[i][k] + sigma.s[k][j] != sigma.s[i][j])
          throw std::invalid_argument("shift matrix: additivity fails");
    }
}

}  // namespace

Pyramid pyramid_from_shift_and_level(const ShiftMatrix& sigma, int level) {
  check_shift_matrix(sigma);
  const int n = sigma.n;
  std::vector<int> columns;
  int used = 0;
  // Left block: heights ascending, s_{i+1,i} columns of height n-i.
  for (int i = n - 1; i >= 1; --i) {
    int c = sigma.s[i][i - 1];
    used += c;
    columns.insert(columns.end(), c, n - i);
  }
  for (int i = 1; i <= n - 1; ++i) used += sigma.s[i - 1][i];
  const int full = level - used;
  if (full < 1)
    throw std::invalid_argument("pyramid: level too small for this shift matrix");
  columns.insert(columns.end(), full, n);
  // Right block: heights descending, s_{i,i+1} columns of height n-i.
  for (int i = 1; i <= n - 1; ++i) {
    int c = sigma.s[i - 1][i];
    columns.insert(columns.end(), c, n - i);
  }
  return pyramid_from_columns(columns);
}

long long gr_generator_count(const Pyramid& p) {
  ShiftMatrix sigma = shift_matrix(p);
  long long count = 0;
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j) {
      long long capped = sigma.at(i, j) + p.rows[std::min(i, j) - 1];
      count += capped - sigma.at(i, j);
    }
  return count;
}

bool same_w_algebra(const Pyramid& a, const Pyramid& b) { return a.rows == b.rows; }

}  // namespace handsaw
