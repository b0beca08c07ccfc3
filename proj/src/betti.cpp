#include "handsaw/betti.hpp"

#include <stdexcept>

#include "handsaw/torus.hpp"

namespace handsaw {

TruncatedSeries poincare_from_fixed_points(int n, const FramingVector& w,
                                           const DimensionVector& vmax, int workers) {
  TruncatedSeries series(vmax);
  for (const auto& [v, tuples] : enumerate_up_to(n, w, vmax, -1, workers)) {
    LaurentPolynomial coeff;
    for (const auto& t : tuples)
      coeff += LaurentPolynomial::monomial(1, static_cast<int>(attracting_dimensions(t).dim_u));
    series.add_term(v, coeff);
  }
  return series;
}

TruncatedSeries poincare_product(int n, const FramingVector& w, const DimensionVector& vmax) {
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("framing vector size != n");
  if (static_cast<int>(vmax.size()) != n - 1)
    throw std::invalid_argument("vmax must have n-1 entries");
  TruncatedSeries series = TruncatedSeries::one(vmax);
  for (int i = 1; i <= n - 1; ++i)
    for (int alpha = 1; alpha <= w[i - 1]; ++alpha) {
      int height = 0;  // w_i + ... + w_j as j advances
      for (int j = i; j <= n - 1; ++j) {
        height += w[j - 1];
        DimensionVector step(n - 1, 0);
        for (int k = i; k <= j; ++k) step[k - 1] = 1;
        series = series * TruncatedSeries::geometric(vmax, step, height - alpha);
      }
    }
  return series;
}

namespace {

// Root intervals [i..j] of the type A_{n-1} positive system, as indicator
// vectors, in a fixed order.
std::vector<DimensionVector> root_intervals(int n) {
  std::vector<DimensionVector> roots;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      DimensionVector r(n - 1, 0);
      for (int k = i; k <= j; ++k) r[k - 1] = 1;
      roots.push_back(r);
    }
  return roots;
}

void kostant_walk(const std::vector<DimensionVector>& roots, std::size_t idx, DimensionVector rem,
                  int tpow, LaurentPolynomial& acc) {
  if (is_zero(rem)) {
    acc += LaurentPolynomial::monomial(1, tpow);
    return;
  }
  if (idx == roots.size()) return;
  const DimensionVector& r = roots[idx];
  int height = static_cast<int>(total(r));
  int k = 0;
  DimensionVector left = rem;
  for (;;) {
    kostant_walk(roots, idx + 1, left, tpow + k * (height - 1), acc);
    if (!componentwise_le(r, left)) break;
    left = subtract(left, r);
    ++k;
  }
}

}  // namespace

LaurentPolynomial kostant_q_oracle(int n, const DimensionVector& v) {
  if (static_cast<int>(v.size()) != n - 1)
    throw std::invalid_argument("kostant_q_oracle: v must have n-1 entries");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("kostant_q_oracle: negative entry");
  LaurentPolynomial acc;
  kostant_walk(root_intervals(n), 0, v, 0, acc);
  return acc;
}

BettiReport verify_betti(int n, const FramingVector& w, const DimensionVector& vmax,
                         int workers) {
  BettiReport report{poincare_from_fixed_points(n, w, vmax, workers),
                     poincare_product(n, w, vmax), false, {}};
  report.equal = report.lhs == report.rhs;
  if (!report.equal) {
    std::map<DimensionVector, bool> seen;
    for (const auto& [v, p] : report.lhs.terms()) seen[v] = true;
    for (const auto& [v, p] : report.rhs.terms()) seen[v] = true;
    for (const auto& [v, ignored] : seen)
      if (report.lhs.coefficient(v) != report.rhs.coefficient(v)) report.mismatches.push_back(v);
  }
  return report;
}

}  // namespace handsaw
