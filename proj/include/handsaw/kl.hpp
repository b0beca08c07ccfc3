#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "handsaw/graded.hpp"
#include "handsaw/ints.hpp"
#include "handsaw/laurent.hpp"

namespace handsaw {

// Permutation of {1..N} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(line_.size()); }
  int operator()(int a) const { return line_[a - 1]; }
  const std::vector<int>& one_line() const { return line_; }

  Permutation inverse() const;
  // (a*b)(x) = a(b(x)).
  friend Permutation compose(const Permutation& a, const Permutation& b);
  // Right multiplication by s_i: swap positions i, i+1 (1 <= i < N).
  Permutation times_s(int i) const;
  // Left multiplication by s_i: swap values i, i+1.
  Permutation s_times(int i) const;

  long long length() const;  // inversion count
  // Smallest i with w(i) > w(i+1); 0 when the identity.
  int first_right_descent() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.line_ == b.line_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.line_ < b.line_; }

  // "3412" for N <= 9, comma-separated otherwise.
  std::string str() const;

 private:
  std::vector<int> line_;
};

// Accepts "3412" (digits, N <= 9) or "3,4,1,2".
Permutation parse_permutation(const std::string& text);

// Sorted-prefix dominance: x <= w iff for every k the descending sort of
// x(1..k) is entrywise <= that of w(1..k).
bool bruhat_le(const Permutation& x, const Permutation& w);

// All of S_N in lexicographic one-line order.
const std::vector<Permutation>& symmetric_group(int n);

// Memoized Kazhdan-Lusztig polynomials via the descent recursion
// P_{x,w} = q^{1-c} P_{xs,ws} + q^c P_{x,ws}
//           - sum_{x<=z<=ws, zs<z} mu(z,ws) q^{(len(w)-len(z))/2} P_{x,z},
// where s is a right descent of w and c = [xs < x].
class KLTable {
 public:
  LaurentPolynomial polynomial(const Permutation& x, const Permutation& w);
  std::size_t cached() const { return memo_.size(); }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, LaurentPolynomial> memo_;
};

inline LaurentPolynomial kl_polynomial(const Permutation& x, const Permutation& w,
                                       KLTable& cache) {
  return cache.polynomial(x, w);
}

// The longest element of the double coset S_lambda * w * S_mu, where the
// parabolic generators are the adjacent equal pairs of the weight vectors
// lambda (acting on values) and mu (acting on positions). Reached greedily:
// apply any length-increasing generator until none applies; greedy reaching
// the coset maximum is verified exhaustively for N <= 5 in the tests.
Permutation longest_double_coset_rep(const Permutation& w, const std::vector<long long>& lambda,
                                     const std::vector<long long>& mu);

using IntegerWeight = std::vector<long long>;

// lambda = (n^{p_n}, ..., 1^{p_1}) and mu' = tier-n-first negated zeros
// (-m_n^1, ..., -m_n^{p_n}, ..., -m_1^1, ..., -m_1^{p_1}).
std::pair<IntegerWeight, IntegerWeight> weights_from_drinfeld(const SpectralData& s);

// The permutation w with target = w . base, where (w.mu)_{w(b)} = mu_b and
// ties are matched first-come-first-served. base must be a rearrangement of
// target.
Permutation match_permutation(const IntegerWeight& base, const IntegerWeight& target);

// [M(P) : L(Q)] for the Verma with integer spectral data s and the simple
// indexed by the l-dominant weight q: multiset mismatch gives 0, otherwise
// P_{w_LR, x_LR}(1) for the longest double-coset representatives of the
// matching permutations.
Int composition_multiplicity(const SpectralData& s, const EllWeight& q, KLTable& table);

struct DecompositionRow {
  Stratum stratum;
  Int multiplicity;
};

// Multiplicities for every l-dominant stratum realized below vmax; the first
// row is always v• = 0 with multiplicity 1.
std::vector<DecompositionRow> decomposition_matrix(const SpectralData& s,
                                                   const DimensionVector& vmax, KLTable& table,
                                                   int workers = 1);

// Framing multisegment: one segment [-m+1, i] per unit of W_i(m).
using Multisegment = std::multiset<std::pair<long long, long long>>;
Multisegment multisegments(const GradedDimVector& g);

}  // namespace handsaw
