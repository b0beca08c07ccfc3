#pragma once

#include <vector>

#include "handsaw/diagrams.hpp"
#include "handsaw/series.hpp"

namespace handsaw {

// LHS of the Poincaré identity: sum over fixed points with column counts
// v <= vmax of t^{dim_u} e^v. t counts complex cell dimensions, so the Betti
// number in cohomological degree 2k is the t^k coefficient.
TruncatedSeries poincare_from_fixed_points(int n, const FramingVector& w,
                                           const DimensionVector& vmax, int workers = 1);

// RHS: product over i in I, alpha = 1..w_i, j = i..n-1 of
// 1/(1 - t^{w_i+...+w_j - alpha} e^{alpha_i+...+alpha_j}), truncated at vmax.
TruncatedSeries poincare_product(int n, const FramingVector& w, const DimensionVector& vmax);

// Independent q-analog recursion for w = (1,...,1): sum over multisets of
// root intervals [i..j] (1 <= i <= j <= n-1) with total v of
// t^{sum (interval length - 1)}. Shares no code with the series machinery.
LaurentPolynomial kostant_q_oracle(int n, const DimensionVector& v);

struct BettiReport {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  bool equal = false;
  std::vector<DimensionVector> mismatches;
};

BettiReport verify_betti(int n, const FramingVector& w, const DimensionVector& vmax,
                         int workers = 1);

}  // namespace handsaw
