#pragma once

#include <boost/rational.hpp>
#include <map>
#include <utility>
#include <vector>

#include "handsaw/diagrams.hpp"
#include "handsaw/ints.hpp"
#include "handsaw/pyramid.hpp"
#include "handsaw/ratfun.hpp"

namespace handsaw {

// Integer zeros of the tier polynomials P_1(u), ..., P_n(u); tier i holds
// deg P_i = dim W_i zeros in a remembered order (line alpha of tier i gets
// zeros[i-1][alpha-1]). Tier profiles need not come from a pyramid: coset
// classes produced by split_by_coset may have empty or non-monotone tiers.
struct SpectralData {
  int n = 0;
  std::vector<std::vector<long long>> zeros;

  FramingVector framing() const;
  // Validates zeros tier i has exactly p_i entries.
  static SpectralData from_pyramid(const Pyramid& p,
                                   const std::vector<std::vector<long long>>& zeros);
};

using Rational = boost::rational<long long>;

struct RationalZeros {
  int n = 0;
  std::vector<std::vector<Rational>> zeros;
};

struct CosetClass {
  Rational shift;  // common fractional part in [0,1)
  SpectralData data;
};

// Partitions the zeros into classes with pairwise integer differences and
// shifts each class to integers; classes come out sorted by shift, entries
// keep their per-tier input order.
std::vector<CosetClass> split_by_coset(const RationalZeros& input);

// Eigenvalue-refined dimensions at a fixed point: v[(i,m)] counts boxes of
// column i carrying eigenvalue m, w[(i,m)] counts tier-i lines whose zero is
// m. The box at horizontal offset h and vertical offset d from the corner of
// the line (i,alpha) diagram lands in v[(i+h, m_i^alpha - d)].
struct GradedDimVector {
  int n = 0;
  std::map<std::pair<int, long long>, int> v;
  std::map<std::pair<int, long long>, int> w;

  DimensionVector underlying_v() const;

  friend bool operator==(const GradedDimVector& a, const GradedDimVector& b) {
    return a.n == b.n && a.v == b.v && a.w == b.w;
  }
  friend bool operator<(const GradedDimVector& a, const GradedDimVector& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.w < b.w;
  }
};

GradedDimVector graded_dimensions(const FixedPointTuple& t, const SpectralData& s);

// Reindexing V'_j(k) = V_{(j-k)/2}((j+k)/2), W'_j(k) = W_{(j-k+1)/2}((j+k-1)/2);
// V' keys have j-k even, W' keys have j-k odd.
struct PrimedGrading {
  std::map<std::pair<long long, long long>, int> v;
  std::map<std::pair<long long, long long>, int> w;
};

PrimedGrading regrade(const GradedDimVector& g);

// Tier rational functions (P_i Q_i)(u) = prod_m (u-m)^{E_i(m)} with
// E_i(m) = W_i(m) + V_i(m+1) - V_i(m) - V_{i-1}(m+1) + V_{i-1}(m),
// V_0 = V_n = 0. Tier i keeps total degree dim W_i.
struct EllWeight {
  std::vector<IntRootedRational> tiers;  // index i-1 holds tier i

  friend bool operator==(const EllWeight& a, const EllWeight& b) { return a.tiers == b.tiers; }
  friend bool operator<(const EllWeight& a, const EllWeight& b) { return a.tiers < b.tiers; }
};

EllWeight ell_weight(const GradedDimVector& g);

// Dominant = every tier is a polynomial.
bool is_ell_dominant(const EllWeight& weight);

struct Stratum {
  GradedDimVector dims;
  EllWeight weight;
};

// Deduplicated graded dimension vectors realized by fixed points with
// underlying v <= vmax, filtered to the l-dominant ones, sorted by
// GradedDimVector order (the empty vector, v• = 0, always comes first).
std::vector<Stratum> strata(const SpectralData& s, const DimensionVector& vmax,
                            int workers = 1);

struct GtEntry {
  EllWeight weight;
  GradedDimVector dims;
  Int multiplicity;
};

// Gelfand-Tsetlin character of the Verma with highest l-weight P: counts the
// fixed points realizing each l-weight (an Euler-characteristic count),
// sorted by GradedDimVector order.
std::vector<GtEntry> gt_character(const SpectralData& s, const DimensionVector& vmax,
                                  int workers = 1);

}  // namespace handsaw
