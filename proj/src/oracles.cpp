#include "handsaw/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace handsaw {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

LaurentPolynomial r_poly(const Permutation& x, const Permutation& w,
                         std::map<Key, LaurentPolynomial>& memo) {
  if (x == w) return LaurentPolynomial::one();
  if (!bruhat_le(x, w)) return LaurentPolynomial();
  Key key{x.one_line(), w.one_line()};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int s = w.first_right_descent();
  const Permutation ws = w.times_s(s);
  const Permutation xs = x.times_s(s);
  LaurentPolynomial result;
  if (xs.length() < x.length()) {
    result = r_poly(xs, ws, memo);
  } else {
    const LaurentPolynomial q = LaurentPolynomial::monomial(1, 1);
    const LaurentPolynomial q_minus_1 = q - LaurentPolynomial::one();
    result = q_minus_1 * r_poly(x, ws, memo) + q * r_poly(xs, ws, memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

LaurentPolynomial r_polynomial(const Permutation& x, const Permutation& w) {
  std::map<Key, LaurentPolynomial> memo;
  return r_poly(x, w, memo);
}

LaurentPolynomial kl_polynomial_oracle(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw std::invalid_argument("kl oracle: size mismatch");
  if (!bruhat_le(x, w)) return LaurentPolynomial();

  // The Bruhat interval [x, w], processed by decreasing length.
  std::vector<Permutation> interval;
  for (const Permutation& z : symmetric_group(w.size()))
    if (bruhat_le(x, z) && bruhat_le(z, w)) interval.push_back(z);
  std::stable_sort(interval.begin(), interval.end(),
                   [](const Permutation& a, const Permutation& b) {
                     return a.length() > b.length();
                   });

  std::map<Key, LaurentPolynomial> rmemo;
  std::map<std::vector<int>, LaurentPolynomial> table;  // z -> P_{z,w}
  for (const Permutation& z : interval) {
    if (z == w) {
      table[z.one_line()] = LaurentPolynomial::one();
      continue;
    }
    LaurentPolynomial rhs;
    for (const Permutation& u : interval) {
      if (u == z || u.length() <= z.length() || !bruhat_le(z, u)) continue;
      rhs += r_poly(z, u, rmemo) * table.at(u.one_line());
    }
    const long long gap = w.length() - z.length();
    LaurentPolynomial p;
    for (const auto& [power, coeff] : rhs.terms())
      if (2 * power < gap) p += LaurentPolynomial::monomial(-coeff, power);
    // Exact consistency: q^gap P(1/q) - P must reproduce the full sum.
    LaurentPolynomial mirrored =
        LaurentPolynomial::monomial(1, static_cast<int>(gap)) * p.reciprocal() - p;
    if (mirrored != rhs) throw std::logic_error("kl oracle: triangularity identity failed");
    table[z.one_line()] = p;
  }
  return table.at(x.one_line());
}

std::vector<int> random_unimodal_columns(std::mt19937& rng) {
  const int n = std::uniform_int_distribution<int>(1, 5)(rng);
  auto height = std::uniform_int_distribution<int>(1, n);
  std::vector<int> left, right;
  const int nl = std::uniform_int_distribution<int>(0, 3)(rng);
  const int nr = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < nl; ++i) left.push_back(height(rng));
  for (int i = 0; i < nr; ++i) right.push_back(height(rng));
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end(), std::greater<>());
  const int peak = std::uniform_int_distribution<int>(1, 2)(rng);
  std::vector<int> columns = left;
  columns.insert(columns.end(), peak, n);
  columns.insert(columns.end(), right.begin(), right.end());
  return columns;
}

}  // namespace handsaw
