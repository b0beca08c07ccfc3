#pragma once

#include <optional>
#include <string>
#include <vector>

#include "handsaw/diagrams.hpp"

namespace handsaw {

// One character e_{dst} e_{src}^{-1} t^{tpower} of the tangent space at a
// fixed point. src/dst name framing lines (tier, line).
struct TangentTerm {
  LineRef src;
  LineRef dst;
  int tpower = 0;
};

bool operator==(const TangentTerm& a, const TangentTerm& b);
bool operator<(const TangentTerm& a, const TangentTerm& b);

struct CharacterSum {
  std::vector<TangentTerm> terms;  // sorted (src, dst, tpower)
};

// Tangent character at a fixed point: for every ordered pair of lines
// ((i,a) as src, (j,b) as dst), boxes s of Y_i^a with leg 0 in Y_j^b give
// t^{arm_{Y_i^a}(s)+1} and boxes s of Y_j^b with leg -1 in Y_i^a give
// t^{-arm_{Y_j^b}(s)}.
CharacterSum tangent_character(const FixedPointTuple& t);

// dim of the handsaw variety for (v, w): sum_j v_j (w_j + w_{j+1}).
long long handsaw_dimension(const DimensionVector& v, const FramingVector& w);

struct AttractingDims {
  long long dim_s = 0;  // attracting directions
  long long dim_u = 0;  // repelling directions
};

// Closed form: dim_s = sum_j v_j w_{j+1} + sum_{(i,a)} a * rows(Y_i^a),
// dim_u = sum_j v_j w_j - sum_{(i,a)} a * rows(Y_i^a). Matches the split of
// tangent_character by src <= dst (lexicographically) vs src > dst.
AttractingDims attracting_dimensions(const FixedPointTuple& t);

// Dimension of the stratum whose bubbled part vprime splits into the multiset
// gamma of nonzero dimension vectors (generic part v - vprime):
// sum_j (v_j - vprime_j)(w_j + w_{j+1}) + |gamma|.
long long stratum_dimension(const DimensionVector& v, const DimensionVector& vprime,
                            const std::vector<DimensionVector>& gamma, const FramingVector& w);

// The unique fixed point with dim_u == 0, or nullopt when (v,w) has no fixed
// points. Zero-or-multiple candidates among a nonempty set is an internal
// consistency failure (std::logic_error).
std::optional<FixedPointTuple> base_point(int n, const FramingVector& w,
                                          const DimensionVector& v);

struct SmallnessViolation {
  DimensionVector v;
  std::string detail;
};

struct SmallnessReport {
  bool pass = true;
  long long checked_vectors = 0;    // nonzero v with fixed points
  long long checked_strata = 0;     // (vprime, gamma) pairs checked
  long long max_dim_u = -1;         // extremal repelling dimension seen
  DimensionVector extremal_v;       // where it is attained
  std::optional<FixedPointTuple> extremal;  // fixed point attaining it
  std::vector<SmallnessViolation> violations;
};

// Requires weakly increasing w. Checks, for every nonzero v <= vmax with
// fixed points, 2*max(dim_u) <= handsaw_dimension(v,w) - 2, and for every
// nonzero vprime <= vmax and multiset gamma = {g_1,...,g_m} of nonzero
// vectors summing to vprime (all parts carrying fixed points) the fiber
// bound 2 * sum_a max(dim_u over g_a) <= handsaw_dimension(vprime,w) - 2m.
SmallnessReport verify_smallness(int n, const FramingVector& w, const DimensionVector& vmax,
                                 int workers = 1);

}  // namespace handsaw
