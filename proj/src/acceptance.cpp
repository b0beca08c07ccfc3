#include "handsaw/acceptance.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "handsaw/betti.hpp"
#include "handsaw/diagrams.hpp"
#include "handsaw/dimvec.hpp"
#include "handsaw/graded.hpp"
#include "handsaw/io.hpp"
#include "handsaw/kl.hpp"
#include "handsaw/oracles.hpp"
#include "handsaw/parallel.hpp"
#include "handsaw/pyramid.hpp"
#include "handsaw/torus.hpp"

namespace handsaw {

namespace {

// Collects failure messages; a criterion passes iff nothing was recorded.
class Trail {
 public:
  void fail(const std::string& message) {
    if (failures_ < 4) {
      if (!text_.empty()) text_ += "; ";
      text_ += message;
    }
    ++failures_;
  }

  void expect(bool ok, const std::string& message) {
    if (!ok) fail(message);
  }

  bool ok() const { return failures_ == 0; }

  std::string describe(const std::string& success) const {
    if (ok()) return success;
    std::string out = text_;
    if (failures_ > 4) {
      out += "; (+" + std::to_string(failures_ - 4) + " more)";
    }
    return out;
  }

 private:
  int failures_ = 0;
  std::string text_;
};

// Every dimension vector v <= bound with total(v) <= total_cap, in
// lexicographic order starting from the zero vector.
std::vector<DimensionVector> vectors_in_box(const DimensionVector& bound,
                                            int total_cap) {
  std::vector<DimensionVector> out;
  DimensionVector v(bound.size(), 0);
  while (true) {
    if (total(v) <= total_cap) out.push_back(v);
    std::size_t j = v.size();
    while (j > 0 && v[j - 1] == bound[j - 1]) {
      v[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
    ++v[j - 1];
  }
  return out;
}

// All framing vectors of length n with entries in 0..entry_max and total
// between 1 and total_max, in lexicographic order.
std::vector<FramingVector> framing_grid(int n, int entry_max, int total_max) {
  std::vector<FramingVector> out;
  FramingVector w(n, 0);
  while (true) {
    int t = total(w);
    if (t >= 1 && t <= total_max) out.push_back(w);
    std::size_t j = w.size();
    while (j > 0 && w[j - 1] == entry_max) {
      w[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
    ++w[j - 1];
  }
  return out;
}

std::string config_label(int n, const FramingVector& w) {
  return "n=" + std::to_string(n) + " w=" + format_vector(w);
}

// ---- criterion 1: the five-column pyramid worked end to end ----

CriterionResult criterion_pyramid(const AcceptanceOptions&) {
  Trail trail;
  Pyramid p = pyramid_from_columns({1, 1, 3, 4, 2});
  trail.expect(p.n == 4, "height: expected 4, got " + std::to_string(p.n));
  trail.expect(p.rows == std::vector<int>({1, 2, 3, 5}),
               "rows: expected (1,2,3,5), got " + format_vector(p.rows));
  trail.expect(p.boxes == 11,
               "boxes: expected 11, got " + std::to_string(p.boxes));

  ShiftMatrix s = shift_matrix(p);
  const std::vector<std::tuple<int, int, int>> expected = {
      {2, 1, 1}, {3, 2, 0}, {4, 3, 2}, {1, 2, 0}, {2, 3, 1}, {3, 4, 0}};
  for (const auto& [i, j, value] : expected) {
    trail.expect(s.at(i, j) == value,
                 "s(" + std::to_string(i) + "," + std::to_string(j) +
                     "): expected " + std::to_string(value) + ", got " +
                     std::to_string(s.at(i, j)));
  }
  for (int i = 1; i < p.n; ++i) {
    int jump = p.rows[i] - p.rows[i - 1];
    trail.expect(s.at(i + 1, i) + s.at(i, i + 1) == jump,
                 "row jump at tier " + std::to_string(i));
  }

  Pyramid back = pyramid_from_shift_and_level(s, 5);
  trail.expect(back.columns == p.columns,
               "round trip: got " + format_vector(back.columns));
  CriterionResult r;
  r.name = "pyramid-figure";
  r.pass = trail.ok();
  r.detail = trail.describe(
      "columns (1,1,3,4,2): n=4 p=(1,2,3,5) N=11, shift entries and "
      "round trip exact");
  return r;
}

// ---- criterion 2: fixed-point Betti sums against the product formula ----

CriterionResult criterion_betti(const AcceptanceOptions& options) {
  Trail trail;
  int max_n = options.quick ? 3 : 4;
  int w_total_max = options.quick ? 4 : 5;
  int cap = options.quick ? 4 : 6;

  std::vector<std::pair<int, FramingVector>> configs;
  for (int n = 1; n <= max_n; ++n) {
    for (const FramingVector& w : framing_grid(n, 2, w_total_max)) {
      configs.emplace_back(n, w);
    }
  }

  std::vector<std::string> faults = parallel_map<std::string>(
      configs.size(), options.workers, [&](std::size_t index) -> std::string {
        const auto& [n, w] = configs[index];
        DimensionVector vmax(static_cast<std::size_t>(n > 1 ? n - 1 : 0), cap);
        auto buckets = enumerate_up_to(n, w, vmax, cap, 1);
        TruncatedSeries product = poincare_product(n, w, vmax);
        for (const DimensionVector& v : vectors_in_box(vmax, cap)) {
          LaurentPolynomial lhs;
          auto it = buckets.find(v);
          if (it != buckets.end()) {
            for (const FixedPointTuple& fp : it->second) {
              lhs += LaurentPolynomial::monomial(
                  1, static_cast<int>(attracting_dimensions(fp).dim_u));
            }
          }
          if (!(lhs == product.coefficient(v))) {
            return config_label(n, w) + " mismatch at v=" + format_vector(v);
          }
        }
        return "";
      });
  for (const std::string& fault : faults) {
    if (!fault.empty()) trail.fail(fault);
  }

  CriterionResult r;
  r.id = 2;
  r.name = "betti-identity";
  r.pass = trail.ok();
  r.detail = trail.describe(
      std::to_string(configs.size()) + " framings (n<=" +
      std::to_string(max_n) + ", entries<=2, sum<=" +
      std::to_string(w_total_max) + "), all coefficients with |v|<=" +
      std::to_string(cap) + " exact");
  return r;
}

// ---- criterion 3: the pure framing column against the q-analogue ----

CriterionResult criterion_kostant(const AcceptanceOptions& options) {
  Trail trail;
  int max_n = options.quick ? 3 : 4;
  int cap = options.quick ? 4 : 6;
  long long checked = 0;

  for (int n = 2; n <= max_n; ++n) {
    FramingVector w(static_cast<std::size_t>(n), 1);
    DimensionVector vmax(static_cast<std::size_t>(n - 1), cap);
    TruncatedSeries product = poincare_product(n, w, vmax);
    for (const DimensionVector& v : vectors_in_box(vmax, cap)) {
      LaurentPolynomial lhs = product.coefficient(v);
      LaurentPolynomial rhs = kostant_q_oracle(n, v);
      ++checked;
      trail.expect(lhs == rhs, "n=" + std::to_string(n) + " v=" +
                                   format_vector(v) + ": product " +
                                   lhs.str() + " vs count " + rhs.str());
    }
  }

  CriterionResult r;
  r.id = 3;
  r.name = "kostant-oracle";
  r.pass = trail.ok();
  r.detail = trail.describe("w=(1,...,1) for n=2.." + std::to_string(max_n) +
                            ": " + std::to_string(checked) +
                            " coefficients match the q-analogue exactly");
  return r;
}

// ---- criterion 4: tangent characters behave like tangent spaces ----

CriterionResult criterion_tangent(const AcceptanceOptions& options) {
  Trail trail;
  int w_total_max = options.quick ? 3 : 5;
  int cap = options.quick ? 3 : 5;
  long long fixed_points = 0;

  for (int n = 1; n <= 3; ++n) {
    for (const FramingVector& w : framing_grid(n, 2, w_total_max)) {
      DimensionVector vmax(static_cast<std::size_t>(n - 1), cap);
      auto buckets = enumerate_up_to(n, w, vmax, cap, options.workers);
      std::vector<LineRef> lines = line_list(n, w);
      for (const auto& [v, tuples] : buckets) {
        long long ambient = handsaw_dimension(v, w);
        for (const FixedPointTuple& fp : tuples) {
          ++fixed_points;
          CharacterSum character = tangent_character(fp);
          std::string at = config_label(n, w) + " fp=" +
                           format_fixed_point(fp);

          if (static_cast<long long>(character.terms.size()) != ambient) {
            trail.fail(at + ": " + std::to_string(character.terms.size()) +
                       " terms vs dim " + std::to_string(ambient));
            continue;
          }

          // Per-pair term counts and the sign split, tallied in one pass.
          std::map<std::pair<LineRef, LineRef>, long long> pair_counts;
          long long below = 0, strictly_above = 0;
          bool diagonal_ok = true;
          for (const TangentTerm& term : character.terms) {
            pair_counts[{term.src, term.dst}] += 1;
            bool le = std::make_pair(term.src.tier, term.src.line) <=
                      std::make_pair(term.dst.tier, term.dst.line);
            (le ? below : strictly_above) += 1;
            if (term.src == term.dst && term.tpower < 1) diagonal_ok = false;
          }
          trail.expect(diagonal_ok, at + ": diagonal term with power < 1");

          bool pairs_ok = true;
          for (const LineRef& src : lines) {
            for (const LineRef& dst : lines) {
              const YoungDiagram& ys = fp.diagram(src.tier, src.line);
              const YoungDiagram& yd = fp.diagram(dst.tier, dst.line);
              long long expected = yd.column_height(src.tier) +
                                   ys.column_height(dst.tier - 1);
              long long got = 0;
              auto it = pair_counts.find({src, dst});
              if (it != pair_counts.end()) got = it->second;
              if (got != expected) pairs_ok = false;
            }
          }
          trail.expect(pairs_ok, at + ": per-pair term count mismatch");

          AttractingDims dims = attracting_dimensions(fp);
          trail.expect(dims.dim_s + dims.dim_u == ambient,
                       at + ": dimS+dimU != dim");
          trail.expect(below == dims.dim_s && strictly_above == dims.dim_u,
                       at + ": order split (" + std::to_string(below) + "," +
                           std::to_string(strictly_above) +
                           ") vs closed form (" + std::to_string(dims.dim_s) +
                           "," + std::to_string(dims.dim_u) + ")");
        }
      }
    }
  }

  CriterionResult r;
  r.id = 4;
  r.name = "tangent-consistency";
  r.pass = trail.ok();
  r.detail = trail.describe(
      std::to_string(fixed_points) +
      " fixed points (n<=3, |v|<=" + std::to_string(cap) +
      "): term count, per-pair counts, attracting split, diagonal "
      "positivity all exact");
  return r;
}

// ---- criterion 5: smallness and base points for sorted framings ----

CriterionResult criterion_smallness(const AcceptanceOptions& options) {
  Trail trail;
  int w_total_max = options.quick ? 4 : 5;
  int cap = options.quick ? 3 : 5;
  long long configs = 0, base_points = 0;

  for (int n = 1; n <= 3; ++n) {
    for (const FramingVector& w : framing_grid(n, 2, w_total_max)) {
      if (!std::is_sorted(w.begin(), w.end())) continue;
      ++configs;
      DimensionVector vmax(static_cast<std::size_t>(n - 1), cap);
      SmallnessReport report = verify_smallness(n, w, vmax, options.workers);
      if (!report.pass) {
        const SmallnessViolation& v = report.violations.front();
        trail.fail(config_label(n, w) + ": bound fails at v=" +
                   format_vector(v.v));
        continue;
      }

      auto buckets = enumerate_up_to(n, w, vmax, -1, options.workers);
      for (const auto& [v, tuples] : buckets) {
        if (is_zero(v)) continue;
        long long closed = 0;
        for (const FixedPointTuple& fp : tuples) {
          if (attracting_dimensions(fp).dim_u == 0) ++closed;
        }
        ++base_points;
        std::string at = config_label(n, w) + " v=" + format_vector(v);
        trail.expect(closed == 1, at + ": " + std::to_string(closed) +
                                      " closed points, expected 1");
        std::optional<FixedPointTuple> base = base_point(n, w, v);
        trail.expect(base.has_value() &&
                         attracting_dimensions(*base).dim_u == 0,
                     at + ": base point lookup disagrees");
      }
    }
  }

  CriterionResult r;
  r.id = 5;
  r.name = "smallness";
  r.pass = trail.ok();
  r.detail = trail.describe(
      std::to_string(configs) + " sorted framings: fiber bounds hold and " +
      std::to_string(base_points) +
      " nonzero sectors each carry exactly one closed point");
  return r;
}

// ---- criterion 6: generator counts of the associated graded algebra ----

CriterionResult criterion_generators(const AcceptanceOptions& options) {
  Trail trail;
  std::mt19937 rng(options.seed);
  int trials = options.quick ? 10 : 30;

  for (int trial = 0; trial < trials; ++trial) {
    std::vector<int> columns = random_unimodal_columns(rng);
    Pyramid p = pyramid_from_columns(columns);
    long long got = gr_generator_count(p);

    long long by_min = 0;
    for (int i = 0; i < p.n; ++i) {
      for (int j = 0; j < p.n; ++j) {
        by_min += std::min(p.rows[static_cast<std::size_t>(i)],
                           p.rows[static_cast<std::size_t>(j)]);
      }
    }
    std::vector<int> desc = p.rows;
    std::sort(desc.begin(), desc.end(), std::greater<int>());
    long long by_rank = 0;
    for (std::size_t i = 0; i < desc.size(); ++i) {
      by_rank += (2 * static_cast<long long>(i) + 1) * desc[i];
    }

    std::string at = "columns " + format_vector(columns);
    trail.expect(got == by_min, at + ": count " + std::to_string(got) +
                                    " vs min-sum " + std::to_string(by_min));
    trail.expect(got == by_rank, at + ": count " + std::to_string(got) +
                                     " vs rank form " +
                                     std::to_string(by_rank));
  }

  trail.expect(gr_generator_count(pyramid_from_columns({2})) == 4,
               "single column of height 2: expected 4");
  for (int len : {1, 5, 9}) {
    Pyramid flat = pyramid_from_columns(
        std::vector<int>(static_cast<std::size_t>(len), 1));
    trail.expect(gr_generator_count(flat) == len,
                 "flat pyramid of length " + std::to_string(len));
  }

  CriterionResult r;
  r.id = 6;
  r.name = "gr-generators";
  r.pass = trail.ok();
  r.detail = trail.describe(std::to_string(trials) +
                            " random pyramids plus fixed shapes: generator "
                            "count matches both closed forms");
  return r;
}

// ---- criterion 7: Kazhdan-Lusztig engine against the inversion oracle ----

CriterionResult criterion_kl(const AcceptanceOptions& options) {
  Trail trail;
  KLTable table;

  const std::vector<Permutation>& s3 = symmetric_group(3);
  for (const Permutation& x : s3) {
    for (const Permutation& w : s3) {
      LaurentPolynomial engine = table.polynomial(x, w);
      LaurentPolynomial oracle = kl_polynomial_oracle(x, w);
      std::string at = "S3 x=" + x.str() + " w=" + w.str();
      trail.expect(engine == oracle, at + ": engine " + engine.str() +
                                         " vs oracle " + oracle.str());
      if (bruhat_le(x, w)) {
        trail.expect(engine == LaurentPolynomial::one(),
                     at + ": expected 1, got " + engine.str());
      }
    }
  }

  const std::vector<Permutation>& s4 = symmetric_group(4);
  for (const Permutation& x : s4) {
    for (const Permutation& w : s4) {
      LaurentPolynomial engine = table.polynomial(x, w);
      LaurentPolynomial oracle = kl_polynomial_oracle(x, w);
      trail.expect(engine == oracle, "S4 x=" + x.str() + " w=" + w.str() +
                                         ": engine " + engine.str() +
                                         " vs oracle " + oracle.str());
    }
  }
  LaurentPolynomial one_plus_q =
      LaurentPolynomial::one() + LaurentPolynomial::monomial(1, 1);
  Permutation e({1, 2, 3, 4});
  for (const std::vector<int>& line :
       {std::vector<int>{3, 4, 1, 2}, std::vector<int>{4, 2, 3, 1}}) {
    Permutation w(line);
    LaurentPolynomial oracle = kl_polynomial_oracle(e, w);
    trail.expect(oracle == one_plus_q, "oracle P(e, " + w.str() +
                                           "): expected 1 + q, got " +
                                           oracle.str());
  }

  // Structural properties on the largest group we touch.
  const std::vector<Permutation>& big = symmetric_group(options.quick ? 4 : 5);
  long long property_pairs = 0;
  for (const Permutation& x : big) {
    for (const Permutation& w : big) {
      if (!bruhat_le(x, w)) continue;
      ++property_pairs;
      LaurentPolynomial p = table.polynomial(x, w);
      std::string at = "x=" + x.str() + " w=" + w.str();
      long long gap = w.length() - x.length();
      trail.expect(p.coefficient(0) == 1, at + ": constant term");
      trail.expect(p.nonnegative_coefficients(), at + ": negative coefficient");
      if (x == w) {
        trail.expect(p == LaurentPolynomial::one(), at + ": P(w,w) != 1");
      } else {
        trail.expect(2 * p.max_power() <= gap - 1, at + ": degree too high");
      }
      trail.expect(p == table.polynomial(x.inverse(), w.inverse()),
                   at + ": inverse symmetry");
    }
  }

  CriterionResult r;
  r.id = 7;
  r.name = "kl-engine";
  r.pass = trail.ok();
  r.detail = trail.describe(
      "oracle agreement on all of S3 and S4 (singular pairs give 1 + q), "
      "plus degree/positivity/symmetry on " +
      std::to_string(property_pairs) + " comparable pairs in S" +
      std::string(options.quick ? "4" : "5"));
  return r;
}

// ---- criterion 8: the rank-one algebra, worked by hand ----

CriterionResult criterion_rank_one(const AcceptanceOptions& options) {
  Trail trail;
  Pyramid p = pyramid_from_columns({2});
  int cap = options.quick ? 3 : 5;
  DimensionVector vmax = {cap};

  // Zeros 2 and 0: the gap is a positive integer, so one extra stratum
  // appears beyond the zero sector, and every multiplicity collapses to 1.
  SpectralData separated = SpectralData::from_pyramid(p, {{2}, {0}});
  std::vector<Stratum> layers = strata(separated, vmax, options.workers);
  trail.expect(layers.size() == 2, "zeros (2;0): expected 2 strata, got " +
                                       std::to_string(layers.size()));
  if (layers.size() == 2) {
    trail.expect(layers[0].dims.underlying_v() == DimensionVector{0},
                 "zeros (2;0): first stratum not the zero sector");
    GradedDimVector expected;
    expected.n = 2;
    expected.w[{1, 2}] = 1;
    expected.w[{2, 0}] = 1;
    expected.v[{1, 2}] = 1;
    expected.v[{1, 1}] = 1;
    trail.expect(layers[1].dims == expected,
                 "zeros (2;0): second stratum has unexpected grading");

    KLTable table;
    std::vector<DecompositionRow> rows =
        decomposition_matrix(separated, vmax, table, options.workers);
    bool ones = rows.size() == 2;
    if (ones) {
      ones = rows[0].stratum.dims == layers[0].dims &&
             rows[1].stratum.dims == layers[1].dims &&
             rows[0].multiplicity == 1 && rows[1].multiplicity == 1;
    }
    trail.expect(ones,
                 "zeros (2;0): expected unit multiplicities on both strata");
  }

  std::vector<GtEntry> character = gt_character(separated, vmax, options.workers);
  trail.expect(static_cast<int>(character.size()) == cap + 1,
               "zeros (2;0): expected " + std::to_string(cap + 1) +
                   " graded pieces, got " + std::to_string(character.size()));
  for (const GtEntry& entry : character) {
    trail.expect(entry.multiplicity == 1,
                 "zeros (2;0): a graded piece has multiplicity " +
                     entry.multiplicity.str());
  }

  // Zeros 0 and 5: the gap is not a positive integer, the module is
  // irreducible, and only the zero sector survives.
  SpectralData generic = SpectralData::from_pyramid(p, {{0}, {5}});
  std::vector<Stratum> only = strata(generic, vmax, options.workers);
  trail.expect(only.size() == 1 &&
                   only[0].dims.underlying_v() == DimensionVector{0},
               "zeros (0;5): expected only the zero sector");

  CriterionResult r;
  r.id = 8;
  r.name = "rank-one-module";
  r.pass = trail.ok();
  r.detail = trail.describe(
      "column pair (2): integral gap gives two strata with unit "
      "multiplicities, non-integral gap leaves the module irreducible");
  return r;
}

// ---- criterion 9: graded character mass against the product series ----

CriterionResult criterion_mass(const AcceptanceOptions& options) {
  Trail trail;

  struct Config {
    std::vector<int> columns;
    std::vector<std::vector<long long>> zeros;
    DimensionVector vmax;
  };
  std::vector<Config> configs = {
      {{2}, {{2}, {0}}, {4}},
      {{2}, {{0}, {5}}, {4}},
      {{1, 2}, {{2}, {0, 1}}, {3}},
      {{2, 2}, {{0, 3}, {1, 5}}, {3}},
      {{2, 3}, {{0}, {2, 4}, {1, 3}}, {2, 2}},
      {{1, 2, 3}, {{1}, {0, 2}, {-1, 3, 5}}, {2, 2}},
  };
  if (options.quick) configs.resize(3);

  long long checked = 0;
  for (const Config& config : configs) {
    Pyramid p = pyramid_from_columns(config.columns);
    SpectralData data = SpectralData::from_pyramid(p, config.zeros);
    std::string at = "columns " + format_vector(config.columns);

    std::map<DimensionVector, Int> mass;
    for (const GtEntry& entry : gt_character(data, config.vmax, options.workers)) {
      mass[entry.dims.underlying_v()] += entry.multiplicity;
    }
    TruncatedSeries product = poincare_product(p.n, data.framing(),
                                               config.vmax);
    for (const DimensionVector& v :
         vectors_in_box(config.vmax, total(config.vmax))) {
      Int expected = product.coefficient(v).evaluate_at_one();
      Int got = 0;
      auto it = mass.find(v);
      if (it != mass.end()) got = it->second;
      ++checked;
      trail.expect(got == expected, at + " v=" + format_vector(v) + ": mass " +
                                        got.str() + " vs series " +
                                        expected.str());
    }
  }

  CriterionResult r;
  r.id = 9;
  r.name = "character-mass";
  r.pass = trail.ok();
  r.detail = trail.describe(
      std::to_string(configs.size()) + " spectral configurations, " +
      std::to_string(checked) +
      " sectors: total graded multiplicity equals the series coefficient "
      "at t=1");
  return r;
}

std::vector<CriterionResult> run_core(const AcceptanceOptions& options);

// ---- criterion 10: worker count cannot change a single output byte ----

CriterionResult criterion_determinism(const AcceptanceOptions& options) {
  Trail trail;

  AcceptanceOptions serial = options;
  serial.quick = true;
  serial.workers = 1;
  AcceptanceOptions pooled = serial;
  pooled.workers = 3;

  AcceptanceReport lhs, rhs;
  lhs.criteria = run_core(serial);
  rhs.criteria = run_core(pooled);
  for (const CriterionResult& c : lhs.criteria) lhs.pass = lhs.pass && c.pass;
  for (const CriterionResult& c : rhs.criteria) rhs.pass = rhs.pass && c.pass;

  trail.expect(format_report(lhs) == format_report(rhs),
               "quick reports differ between 1 and 3 workers");
  trail.expect(lhs.pass, "quick rerun failed under 1 worker");

  CriterionResult r;
  r.id = 10;
  r.name = "determinism";
  r.pass = trail.ok();
  r.detail = trail.describe(
      "quick suite rerun twice: byte-identical reports with 1 and 3 workers");
  return r;
}

std::vector<CriterionResult> run_core(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_pyramid(options));
  out.push_back(criterion_betti(options));
  out.push_back(criterion_kostant(options));
  out.push_back(criterion_tangent(options));
  out.push_back(criterion_smallness(options));
  out.push_back(criterion_generators(options));
  out.push_back(criterion_kl(options));
  out.push_back(criterion_rank_one(options));
  out.push_back(criterion_mass(options));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].id = static_cast<int>(i) + 1;
  }
  return out;
}

}  // namespace

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
  AcceptanceReport report;
  report.criteria = run_core(options);
  report.criteria.push_back(criterion_determinism(options));
  report.criteria.back().id = 10;
  for (const CriterionResult& c : report.criteria) {
    report.pass = report.pass && c.pass;
  }
  return report;
}

std::string format_report(const AcceptanceReport& report) {
  std::ostringstream out;
  for (const CriterionResult& c : report.criteria) {
    out << "[" << (c.id < 10 ? " " : "") << c.id << "] "
        << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail
        << "\n";
  }
  out << "overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace handsaw
