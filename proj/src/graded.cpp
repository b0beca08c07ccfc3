#include "handsaw/graded.hpp"

#include <set>
#include <stdexcept>

namespace handsaw {

FramingVector SpectralData::framing() const {
  FramingVector w(n, 0);
  for (int i = 0; i < n; ++i) w[i] = static_cast<int>(zeros[i].size());
  return w;
}

SpectralData SpectralData::from_pyramid(const Pyramid& p,
                                        const std::vector<std::vector<long long>>& zeros) {
  if (static_cast<int>(zeros.size()) != p.n)
    throw std::invalid_argument("spectral data: need one zero list per tier");
  for (int i = 1; i <= p.n; ++i)
    if (static_cast<int>(zeros[i - 1].size()) != p.rows[i - 1])
      throw std::invalid_argument("spectral data: tier " + std::to_string(i) +
                                  " must carry p_i zeros");
  return SpectralData{p.n, zeros};
}

std::vector<CosetClass> split_by_coset(const RationalZeros& input) {
  if (static_cast<int>(input.zeros.size()) != input.n)
    throw std::invalid_argument("split_by_coset: need one zero list per tier");
  auto fractional = [](const Rational& x) {
    // x - floor(x), in [0,1).
    long long q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x < 0) --q;
    return x - q;
  };
  std::map<Rational, SpectralData> classes;
  for (int i = 0; i < input.n; ++i)
    for (const Rational& z : input.zeros[i]) {
      Rational shift = fractional(z);
      auto [it, inserted] = classes.emplace(shift, SpectralData{});
      if (inserted) {
        it->second.n = input.n;
        it->second.zeros.assign(input.n, {});
      }
      Rational integer = z - shift;
      it->second.zeros[i].push_back(integer.numerator() / integer.denominator());
    }
  std::vector<CosetClass> out;
  for (auto& [shift, data] : classes) out.push_back({shift, std::move(data)});
  return out;
}

DimensionVector GradedDimVector::underlying_v() const {
  DimensionVector out(n - 1, 0);
  for (const auto& [key, c] : v) out[key.first - 1] += c;
  return out;
}

GradedDimVector graded_dimensions(const FixedPointTuple& t, const SpectralData& s) {
  if (t.n != s.n || t.w != s.framing())
    throw std::invalid_argument("graded_dimensions: fixed point does not match spectral data");
  GradedDimVector g;
  g.n = s.n;
  auto lines = line_list(t.n, t.w);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int i = lines[k].tier;
    const long long m = s.zeros[i - 1][lines[k].line - 1];
    g.w[{i, m}] += 1;
    const YoungDiagram& d = t.diagrams[k];
    for (int y = 1; y <= d.row_count(); ++y)
      for (int x = d.anchor; x <= d.anchor + d.rows[y - 1] - 1; ++x)
        g.v[{x, m - (y - 1)}] += 1;
  }
  return g;
}

PrimedGrading regrade(const GradedDimVector& g) {
  PrimedGrading out;
  for (const auto& [key, c] : g.v) {
    auto [i, m] = key;
    out.v[{i + m, m - i}] += c;
  }
  for (const auto& [key, c] : g.w) {
    auto [i, m] = key;
    out.w[{i + m, m - i + 1}] += c;
  }
  return out;
}

EllWeight ell_weight(const GradedDimVector& g) {
  auto v_at = [&](int i, long long m) -> int {
    if (i <= 0 || i >= g.n) return 0;
    auto it = g.v.find({i, m});
    return it == g.v.end() ? 0 : it->second;
  };
  EllWeight weight;
  weight.tiers.resize(g.n);
  for (int i = 1; i <= g.n; ++i) {
    std::set<long long> candidates;
    for (const auto& [key, c] : g.w)
      if (key.first == i) candidates.insert(key.second);
    for (const auto& [key, c] : g.v)
      if (key.first == i || key.first == i - 1) {
        candidates.insert(key.second);
        candidates.insert(key.second - 1);
      }
    for (long long m : candidates) {
      auto wit = g.w.find({i, m});
      long long e = (wit == g.w.end() ? 0 : wit->second);
      e += v_at(i, m + 1) - v_at(i, m) - v_at(i - 1, m + 1) + v_at(i - 1, m);
      weight.tiers[i - 1].multiply_factor(m, e);
    }
  }
  return weight;
}

bool is_ell_dominant(const EllWeight& weight) {
  for (const auto& tier : weight.tiers)
    if (!tier.is_polynomial()) return false;
  return true;
}

std::vector<Stratum> strata(const SpectralData& s, const DimensionVector& vmax, int workers) {
  std::map<GradedDimVector, EllWeight> found;
  for (const auto& [v, tuples] : enumerate_up_to(s.n, s.framing(), vmax, -1, workers))
    for (const auto& t : tuples) {
      GradedDimVector g = graded_dimensions(t, s);
      if (found.count(g)) continue;
      EllWeight weight = ell_weight(g);
      if (is_ell_dominant(weight)) found.emplace(std::move(g), std::move(weight));
    }
  std::vector<Stratum> out;
  for (auto& [g, weight] : found) out.push_back({g, weight});
  return out;
}

std::vector<GtEntry> gt_character(const SpectralData& s, const DimensionVector& vmax,
                                  int workers) {
  std::map<GradedDimVector, Int> counts;
  for (const auto& [v, tuples] : enumerate_up_to(s.n, s.framing(), vmax, -1, workers))
    for (const auto& t : tuples) counts[graded_dimensions(t, s)] += 1;
  std::vector<GtEntry> out;
  for (const auto& [g, c] : counts) out.push_back({ell_weight(g), g, c});
  return out;
}

}  // namespace handsaw
