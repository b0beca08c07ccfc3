#include "handsaw/torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "handsaw/parallel.hpp"

namespace handsaw {

namespace {

std::tuple<int, int> key(const LineRef& r) { return {r.tier, r.line}; }

}  // namespace

bool operator==(const TangentTerm& a, const TangentTerm& b) {
  return key(a.src) == key(b.src) && key(a.dst) == key(b.dst) && a.tpower == b.tpower;
}

bool operator<(const TangentTerm& a, const TangentTerm& b) {
  return std::make_tuple(key(a.src), key(a.dst), a.tpower) <
         std::make_tuple(key(b.src), key(b.dst), b.tpower);
}

CharacterSum tangent_character(const FixedPointTuple& t) {
  auto lines = line_list(t.n, t.w);
  CharacterSum out;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    const YoungDiagram& src = t.diagrams[a];
    for (std::size_t b = 0; b < lines.size(); ++b) {
      const YoungDiagram& dst = t.diagrams[b];
      // Boxes of the source diagram sitting exactly at the end of the
      // destination's rows.
      for (int y = 1; y <= src.row_count(); ++y)
        for (int x = src.anchor; x <= src.anchor + src.rows[y - 1] - 1; ++x)
          if (leg_length(x, y, dst) == 0)
            out.terms.push_back({lines[a], lines[b], arm_length(x, y, src) + 1});
      // Boxes of the destination diagram one step past the source's rows.
      for (int y = 1; y <= dst.row_count(); ++y)
        for (int x = dst.anchor; x <= dst.anchor + dst.rows[y - 1] - 1; ++x)
          if (leg_length(x, y, src) == -1)
            out.terms.push_back({lines[a], lines[b], -arm_length(x, y, dst)});
    }
  }
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

long long handsaw_dimension(const DimensionVector& v, const FramingVector& w) {
  const int n = static_cast<int>(w.size());
  if (static_cast<int>(v.size()) != n - 1)
    throw std::invalid_argument("handsaw_dimension: v must have n-1 entries");
  long long d = 0;
  for (int j = 1; j <= n - 1; ++j) d += static_cast<long long>(v[j - 1]) * (w[j - 1] + w[j]);
  return d;
}

AttractingDims attracting_dimensions(const FixedPointTuple& t) {
  DimensionVector v = column_counts(t);
  auto lines = line_list(t.n, t.w);
  long long weighted_rows = 0;
  for (std::size_t k = 0; k < lines.size(); ++k)
    weighted_rows += static_cast<long long>(lines[k].line) * t.diagrams[k].row_count();
  AttractingDims dims;
  for (int j = 1; j <= t.n - 1; ++j) {
    dims.dim_s += static_cast<long long>(v[j - 1]) * t.w[j];
    dims.dim_u += static_cast<long long>(v[j - 1]) * t.w[j - 1];
  }
  dims.dim_s += weighted_rows;
  dims.dim_u -= weighted_rows;
  return dims;
}

long long stratum_dimension(const DimensionVector& v, const DimensionVector& vprime,
                            const std::vector<DimensionVector>& gamma, const FramingVector& w) {
  if (!componentwise_le(vprime, v))
    throw std::invalid_argument("stratum_dimension: vprime must be <= v");
  DimensionVector gamma_sum(vprime.size(), 0);
  for (const DimensionVector& g : gamma) {
    if (is_zero(g)) throw std::invalid_argument("stratum_dimension: zero part in gamma");
    gamma_sum = add(gamma_sum, g);
  }
  if (gamma_sum != vprime)
    throw std::invalid_argument("stratum_dimension: gamma does not sum to vprime");
  return handsaw_dimension(subtract(v, vprime), w) + static_cast<long long>(gamma.size());
}

std::optional<FixedPointTuple> base_point(int n, const FramingVector& w,
                                          const DimensionVector& v) {
  auto points = enumerate_fixed_points(n, w, v);
  if (points.empty()) return std::nullopt;
  std::optional<FixedPointTuple> found;
  for (const auto& t : points)
    if (attracting_dimensions(t).dim_u == 0) {
      if (found) throw std::logic_error("base_point: multiple dim_u == 0 fixed points");
      found = t;
    }
  if (!found) throw std::logic_error("base_point: no dim_u == 0 fixed point in a nonempty set");
  return found;
}

namespace {

// All v with 0 <= v <= vmax componentwise, lexicographic.
std::vector<DimensionVector> box_below(const DimensionVector& vmax) {
  std::vector<DimensionVector> out;
  DimensionVector v(vmax.size(), 0);
  for (;;) {
    out.push_back(v);
    int j = static_cast<int>(v.size()) - 1;
    while (j >= 0 && v[j] == vmax[j]) v[j--] = 0;
    if (j < 0) break;
    ++v[j];
  }
  return out;
}

// Multisets of nonzero vectors <= rem summing to rem, parts weakly
// decreasing in lex order so each multiset appears once.
void multiset_partitions(const DimensionVector& rem, const DimensionVector& bound,
                         std::vector<DimensionVector>& parts,
                         const std::function<void(const std::vector<DimensionVector>&)>& fn) {
  if (is_zero(rem)) {
    fn(parts);
    return;
  }
  // Candidate next parts: nonzero, <= rem componentwise, <= bound in lex.
  std::vector<DimensionVector> candidates;
  for (const DimensionVector& c : box_below(rem))
    if (!is_zero(c) && c <= bound) candidates.push_back(c);
  // Largest first keeps the weakly decreasing convention natural.
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    parts.push_back(*it);
    multiset_partitions(subtract(rem, *it), *it, parts, fn);
    parts.pop_back();
  }
}

}  // namespace

SmallnessReport verify_smallness(int n, const FramingVector& w, const DimensionVector& vmax,
                                 int workers) {
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("framing vector size != n");
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i])
      throw std::invalid_argument("verify_smallness: w must be weakly increasing");

  auto buckets = enumerate_up_to(n, w, vmax, -1, workers);

  // Per-v maxima of dim_u; only v with fixed points appear.
  std::map<DimensionVector, long long> max_u;
  std::map<DimensionVector, const FixedPointTuple*> witness;
  for (const auto& [v, tuples] : buckets)
    for (const auto& t : tuples) {
      long long u = attracting_dimensions(t).dim_u;
      auto it = max_u.find(v);
      if (it == max_u.end() || u > it->second) {
        max_u[v] = u;
        witness[v] = &t;
      }
    }

  SmallnessReport report;
  for (const auto& [v, u] : max_u) {
    if (is_zero(v)) continue;
    ++report.checked_vectors;
    long long dim_q = handsaw_dimension(v, w);
    if (2 * u > dim_q - 2) {
      report.pass = false;
      std::ostringstream os;
      os << "dim_u " << u << " exceeds half-dimension bound for v=" << format_vector(v)
         << " (dim Q = " << dim_q << ")";
      report.violations.push_back({v, os.str()});
    }
    if (u > report.max_dim_u) {
      report.max_dim_u = u;
      report.extremal_v = v;
      report.extremal = *witness[v];
    }
  }

  // Fiber bound over every stratum: parts must all carry fixed points,
  // otherwise the stratum is empty.
  std::function<void(const std::vector<DimensionVector>&)> check_gamma =
      [&](const std::vector<DimensionVector>& gamma) {
        long long fiber = 0;
        DimensionVector vprime(vmax.size(), 0);
        for (const DimensionVector& g : gamma) {
          auto it = max_u.find(g);
          if (it == max_u.end()) return;  // empty central fiber, empty stratum
          fiber += it->second;
          vprime = add(vprime, g);
        }
        if (gamma.empty()) return;
        ++report.checked_strata;
        long long m = static_cast<long long>(gamma.size());
        if (2 * fiber > handsaw_dimension(vprime, w) - 2 * m) {
          report.pass = false;
          std::ostringstream os;
          os << "fiber bound fails for vprime=" << format_vector(vprime) << " with " << m
             << " parts";
          report.violations.push_back({vprime, os.str()});
        }
      };
  std::vector<DimensionVector> parts;
  for (const DimensionVector& vprime : box_below(vmax)) {
    if (is_zero(vprime)) continue;
    multiset_partitions(vprime, vprime, parts, check_gamma);
  }
  return report;
}

}  // namespace handsaw
