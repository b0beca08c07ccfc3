#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "handsaw/graded.hpp"
#include "handsaw/kl.hpp"
#include "handsaw/oracles.hpp"
#include "handsaw/pyramid.hpp"

using namespace handsaw;

namespace {

const LaurentPolynomial kOne = LaurentPolynomial::one();
const LaurentPolynomial kQ = LaurentPolynomial::monomial(1, 1);

// Full double coset S_lambda * w * S_mu by closure under the parabolic
// generators, independent of the greedy implementation.
std::set<Permutation> coset_by_closure(const Permutation& w, const std::vector<long long>& lambda,
                                       const std::vector<long long>& mu) {
  std::set<Permutation> seen = {w};
  std::vector<Permutation> frontier = {w};
  while (!frontier.empty()) {
    Permutation current = frontier.back();
    frontier.pop_back();
    for (int i = 1; i < current.size(); ++i) {
      std::vector<Permutation> next;
      if (lambda[i - 1] == lambda[i]) next.push_back(current.s_times(i));
      if (mu[i - 1] == mu[i]) next.push_back(current.times_s(i));
      for (const Permutation& p : next) {
        if (seen.insert(p).second) frontier.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation w({3, 1, 2});
  CHECK(w(1) == 3);
  CHECK(w.length() == 2);
  CHECK(w.inverse() == Permutation({2, 3, 1}));
  CHECK(compose(w, w.inverse()) == Permutation::identity(3));
  CHECK(compose(w.inverse(), w) == Permutation::identity(3));
  CHECK(w.times_s(1) == Permutation({1, 3, 2}));
  CHECK(w.s_times(1) == Permutation({3, 2, 1}));
  CHECK(w.first_right_descent() == 1);
  CHECK(Permutation::identity(4).first_right_descent() == 0);
  CHECK(Permutation({4, 3, 2, 1}).length() == 6);
  CHECK(w.str() == "312");

  CHECK(parse_permutation("312") == w);
  CHECK(parse_permutation("3,1,2") == w);
  CHECK_THROWS_AS(parse_permutation("313"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("bruhat order on S3") {
  Permutation e({1, 2, 3}), s1({2, 1, 3}), s2({1, 3, 2});
  Permutation s1s2({2, 3, 1}), s2s1({3, 1, 2}), w0({3, 2, 1});

  for (const Permutation& w : symmetric_group(3)) {
    CHECK(bruhat_le(e, w));
    CHECK(bruhat_le(w, w0));
    CHECK(bruhat_le(w, w));
  }
  CHECK_FALSE(bruhat_le(s1, s2));
  CHECK_FALSE(bruhat_le(s2, s1));
  CHECK(bruhat_le(s1, s1s2));
  CHECK(bruhat_le(s1, s2s1));
  CHECK_FALSE(bruhat_le(s1s2, s2s1));
  CHECK_FALSE(bruhat_le(w0, s1s2));

  // x <= w in Bruhat order forces len(x) <= len(w)
  for (const Permutation& x : symmetric_group(4)) {
    for (const Permutation& w : symmetric_group(4)) {
      if (bruhat_le(x, w)) CHECK(x.length() <= w.length());
    }
  }
}

TEST_CASE("kl polynomials on small groups") {
  KLTable table;
  for (const Permutation& x : symmetric_group(3)) {
    for (const Permutation& w : symmetric_group(3)) {
      LaurentPolynomial p = table.polynomial(x, w);
      if (bruhat_le(x, w)) {
        CHECK(p == kOne);
      } else {
        CHECK(p.is_zero());
      }
    }
  }

  // the two singular Schubert varieties of the rank-3 flag variety
  CHECK(table.polynomial(Permutation({1, 2, 3, 4}), Permutation({3, 4, 1, 2})) == kOne + kQ);
  CHECK(table.polynomial(Permutation({1, 2, 3, 4}), Permutation({4, 2, 3, 1})) == kOne + kQ);
  // the full flag variety is smooth: P(x, w0) = 1 for every x
  Permutation w0({4, 3, 2, 1});
  for (const Permutation& x : symmetric_group(4)) CHECK(table.polynomial(x, w0) == kOne);

  // repeated lookups are cached, not recomputed differently
  std::size_t cached = table.cached();
  CHECK(table.polynomial(Permutation({1, 2, 3, 4}), Permutation({3, 4, 1, 2})) == kOne + kQ);
  CHECK(table.cached() == cached);
}

TEST_CASE("descent engine matches the inversion oracle") {
  KLTable table;
  for (const Permutation& x : symmetric_group(4)) {
    for (const Permutation& w : symmetric_group(4)) {
      CHECK(table.polynomial(x, w) == kl_polynomial_oracle(x, w));
    }
  }

  // R-polynomial sanity in the oracle's own terms
  Permutation e({1, 2}), s({2, 1});
  CHECK(r_polynomial(e, e) == kOne);
  CHECK(r_polynomial(e, s) == kQ - kOne);
  CHECK(r_polynomial(s, e).is_zero());
}

TEST_CASE("longest double coset representatives") {
  const std::vector<std::vector<long long>> weights3 = {
      {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 2, 3}};
  for (const Permutation& w : symmetric_group(3)) {
    for (const auto& lambda : weights3) {
      for (const auto& mu : weights3) {
        std::set<Permutation> coset = coset_by_closure(w, lambda, mu);
        Permutation longest = *std::max_element(
            coset.begin(), coset.end(), [](const Permutation& a, const Permutation& b) {
              return a.length() < b.length();
            });
        long long top = longest.length();
        long long with_top = 0;
        for (const Permutation& p : coset)
          if (p.length() == top) ++with_top;
        CHECK(with_top == 1);  // parabolic double cosets have a unique maximum
        CHECK(longest_double_coset_rep(w, lambda, mu) == longest);
      }
    }
  }

  const std::vector<std::vector<long long>> weights4 = {
      {0, 0, 0, 0}, {0, 0, 1, 2}, {0, 0, 1, 1}, {1, 2, 3, 4}, {5, 5, 2, 2}};
  for (const Permutation& w : symmetric_group(4)) {
    for (const auto& lambda : weights4) {
      for (const auto& mu : weights4) {
        std::set<Permutation> coset = coset_by_closure(w, lambda, mu);
        Permutation longest = *std::max_element(
            coset.begin(), coset.end(), [](const Permutation& a, const Permutation& b) {
              return a.length() < b.length();
            });
        CHECK(longest_double_coset_rep(w, lambda, mu) == longest);
      }
    }
  }
}

TEST_CASE("drinfeld weights and matching") {
  SpectralData s = SpectralData::from_pyramid(pyramid_from_columns({1, 2}), {{0}, {3, 1}});
  auto [lambda, mu] = weights_from_drinfeld(s);
  CHECK(lambda == IntegerWeight{2, 2, 1});
  CHECK(mu == IntegerWeight{-3, -1, 0});

  CHECK(match_permutation({5, 7}, {7, 5}) == Permutation({2, 1}));
  CHECK(match_permutation({3, 3}, {3, 3}) == Permutation({1, 2}));
  CHECK(match_permutation({1, 2, 1}, {1, 1, 2}) == Permutation({1, 3, 2}));
  CHECK_THROWS_AS(match_permutation({1, 2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("composition multiplicities for gl2") {
  KLTable table;
  SpectralData s = SpectralData::from_pyramid(pyramid_from_columns({2}), {{2}, {0}});
  std::vector<Stratum> layers = strata(s, {5});
  REQUIRE(layers.size() == 2);
  CHECK(composition_multiplicity(s, layers[0].weight, table) == 1);
  CHECK(composition_multiplicity(s, layers[1].weight, table) == 1);

  // a weight from different spectral data has the wrong zero multiset
  SpectralData other = SpectralData::from_pyramid(pyramid_from_columns({2}), {{0}, {5}});
  std::vector<Stratum> foreign = strata(other, {2});
  REQUIRE(!foreign.empty());
  CHECK(composition_multiplicity(s, foreign[0].weight, table) == 0);

  std::vector<DecompositionRow> rows = decomposition_matrix(s, {5}, table);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].stratum.dims.underlying_v() == DimensionVector{0});
  CHECK(rows[0].multiplicity == 1);
  CHECK(rows[1].multiplicity == 1);
}

TEST_CASE("framing multisegments") {
  GradedDimVector g;
  g.n = 2;
  g.w[{1, 2}] = 1;
  g.w[{2, 0}] = 2;
  Multisegment segments = multisegments(g);
  Multisegment expected = {{-1, 1}, {1, 2}, {1, 2}};
  CHECK(segments == expected);
}
