#pragma once

#include <string>
#include <vector>

namespace handsaw {

// Unimodal column arrangement. columns = (q_1,...,q_l) with
// q_1 <= ... <= q_pivot and q_{pivot+1} >= ... >= q_l; pivot is the smallest
// index making both chains hold. n = max q_c; rows[i-1] = p_i counts the
// columns of height >= n-i+1, so p is weakly increasing with p_n = l and
// sum p_i = sum q_c = N.
struct Pyramid {
  std::vector<int> columns;
  int pivot = 0;
  int n = 0;
  std::vector<int> rows;
  long long boxes = 0;

  int level() const { return static_cast<int>(columns.size()); }
};

// n x n integer matrix, zero diagonal, determined by the two diagonals next to
// the main one via additivity s[i][j] + s[j][k] = s[i][k] whenever j lies
// between i and k. Entries are 0-indexed here; s[i][j] holds s_{i+1,j+1}.
struct ShiftMatrix {
  int n = 0;
  std::vector<std::vector<int>> s;

  int at(int i, int j) const { return s[i - 1][j - 1]; }  // 1-based accessor
};

// Validates positivity and unimodality; throws std::invalid_argument.
Pyramid pyramid_from_columns(const std::vector<int>& columns);

ShiftMatrix shift_matrix(const Pyramid& p);

// Rebuilds the unique pyramid with the given shift matrix and level: columns
// of height n-i (s_{i+1,i} copies) ascending, then level - sum(diagonals)
// full-height columns (must be >= 1), then heights n-i (s_{i,i+1} copies)
// descending. Inverse of shift_matrix for every pyramid.
Pyramid pyramid_from_shift_and_level(const ShiftMatrix& sigma, int level);

// Number of generators of the associated graded algebra: entries (i,j,r) with
// s_{ij} < r <= s_{ij} + p_{min(i,j)}, summed over the full n x n grid.
long long gr_generator_count(const Pyramid& p);

// Two pyramids present the same algebra exactly when their row vectors match.
bool same_w_algebra(const Pyramid& a, const Pyramid& b);

}  // namespace handsaw
