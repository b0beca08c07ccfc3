#include "handsaw/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "handsaw/acceptance.hpp"
#include "handsaw/betti.hpp"
#include "handsaw/diagrams.hpp"
#include "handsaw/graded.hpp"
#include "handsaw/io.hpp"
#include "handsaw/kl.hpp"
#include "handsaw/parallel.hpp"
#include "handsaw/pyramid.hpp"
#include "handsaw/torus.hpp"

namespace handsaw {

namespace {

// JSON number when it fits int64, decimal string beyond that.
Json json_int(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("--n must be a positive integer");
}

FramingVector parse_framing(const std::string& text, int n) {
  FramingVector w = parse_int_list(text);
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("--w must list exactly n entries");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("--w entries must be nonnegative");
  return w;
}

// n-1 nonnegative entries; for n = 1 the flag is omitted entirely.
DimensionVector parse_dims(const std::string& text, int n, const std::string& flag) {
  DimensionVector v = parse_int_list(text);
  if (static_cast<int>(v.size()) != n - 1)
    throw std::invalid_argument(flag + " must list exactly n-1 entries");
  for (int x : v)
    if (x < 0) throw std::invalid_argument(flag + " entries must be nonnegative");
  return v;
}

std::string tpower_str(int power) { return LaurentPolynomial::monomial(1, power).str(); }

std::string fixed_point_label(const FixedPointTuple& t) {
  std::string s = format_fixed_point(t);
  return s.empty() ? "-" : s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of handsaw quiver varieties and finite W-algebra modules"};
  app.name("handsaw");
  app.require_subcommand(1);

  bool json = false;
  unsigned seed = AcceptanceOptions().seed;
  int workers = 0;
  app.add_flag("--json", json, "Emit one JSON object instead of text");
  app.add_option("--seed", seed, "Seed for randomized checks inside verify");
  app.add_option("--workers", workers, "Worker threads (default: hardware parallelism)");

  std::string columns_text, w_text, v_text, vmax_text, zeros_text, fp_text;
  std::string x_text, wperm_text;
  int n = 0;
  int max_perm = 8;
  bool quick = false;

  CLI::App* pyramid_cmd = app.add_subcommand("pyramid", "Pyramid bookkeeping");
  pyramid_cmd->require_subcommand(1);
  pyramid_cmd->fallthrough();
  CLI::App* info_cmd =
      pyramid_cmd->add_subcommand("info", "Rows, shift matrix and generator count");
  info_cmd->fallthrough();
  info_cmd->add_option("--columns", columns_text, "Column heights, e.g. 1,1,3,4,2")->required();

  CLI::App* fixed_cmd =
      app.add_subcommand("fixed-points", "Torus fixed points with column counts v");
  fixed_cmd->fallthrough();
  fixed_cmd->add_option("--n", n, "Number of tiers")->required();
  fixed_cmd->add_option("--w", w_text, "Framing multiplicities w_1,...,w_n")->required();
  fixed_cmd->add_option("--v", v_text, "Column counts v_1,...,v_{n-1} (omit when n = 1)");

  CLI::App* tangent_cmd = app.add_subcommand("tangent", "Tangent character at one fixed point");
  tangent_cmd->fallthrough();
  tangent_cmd->add_option("--n", n, "Number of tiers")->required();
  tangent_cmd->add_option("--w", w_text, "Framing multiplicities")->required();
  tangent_cmd->add_option("--fixed-point", fp_text,
                          "Fixed point, e.g. '1.1:[2,1];2.1:[1]' ('' = all empty)");

  CLI::App* smallness_cmd =
      app.add_subcommand("smallness", "Fiber dimension bounds for weakly increasing w");
  smallness_cmd->fallthrough();
  smallness_cmd->add_option("--n", n, "Number of tiers")->required();
  smallness_cmd->add_option("--w", w_text, "Weakly increasing framing")->required();
  smallness_cmd->add_option("--vmax", vmax_text, "Componentwise bound on v (omit when n = 1)");

  CLI::App* betti_cmd =
      app.add_subcommand("betti", "Fixed-point Poincare series against the product formula");
  betti_cmd->fallthrough();
  betti_cmd->add_option("--n", n, "Number of tiers")->required();
  betti_cmd->add_option("--w", w_text, "Framing multiplicities")->required();
  betti_cmd->add_option("--vmax", vmax_text, "Componentwise bound on v (omit when n = 1)");

  CLI::App* strata_cmd = app.add_subcommand("strata", "l-dominant strata below vmax");
  strata_cmd->fallthrough();
  strata_cmd->add_option("--pyramid", columns_text, "Pyramid column heights")->required();
  strata_cmd->add_option("--zeros", zeros_text, "Zeros per tier, e.g. '1:2;2:0'")->required();
  strata_cmd->add_option("--vmax", vmax_text, "Componentwise bound on v (omit when n = 1)");

  CLI::App* character_cmd =
      app.add_subcommand("character", "Gelfand-Tsetlin character of the Verma module");
  character_cmd->fallthrough();
  character_cmd->add_option("--pyramid", columns_text, "Pyramid column heights")->required();
  character_cmd->add_option("--zeros", zeros_text, "Zeros per tier")->required();
  character_cmd->add_option("--vmax", vmax_text, "Componentwise bound on v (omit when n = 1)");

  CLI::App* kl_cmd = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P[x, w]");
  kl_cmd->fallthrough();
  kl_cmd->add_option("--x", x_text, "Lower permutation, one-line (e.g. 1324)")->required();
  kl_cmd->add_option("--w", wperm_text, "Upper permutation, one-line")->required();
  kl_cmd->add_option("--max-n", max_perm, "Refuse permutations longer than this (default 8)");

  CLI::App* mult_cmd =
      app.add_subcommand("multiplicity", "Composition multiplicities of the Verma module");
  mult_cmd->fallthrough();
  mult_cmd->add_option("--pyramid", columns_text, "Pyramid column heights")->required();
  mult_cmd->add_option("--zeros", zeros_text, "Zeros per tier")->required();
  mult_cmd->add_option("--vmax", vmax_text, "Componentwise bound on v (omit when n = 1)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->fallthrough();
  verify_cmd->add_flag("--quick", quick, "Reduced grids (seconds instead of minutes)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  int run_workers = workers > 0 ? workers : default_workers();

  try {
    if (info_cmd->parsed()) {
      Pyramid p = pyramid_from_columns(parse_int_list(columns_text));
      ShiftMatrix s = shift_matrix(p);
      long long gens = gr_generator_count(p);
      if (json) {
        Json doc = to_json(p);
        doc["shift_matrix"] = to_json(s);
        doc["gr_generators"] = gens;
        out << doc.dump(2) << "\n";
      } else {
        out << "columns: " << format_vector(p.columns) << "\n";
        out << "n: " << p.n << "\n";
        out << "p: " << format_vector(p.rows) << "\n";
        out << "N: " << p.boxes << "\n";
        out << "pivot: " << p.pivot << "\n";
        out << "shift matrix:\n" << format_shift_matrix(s);
        out << "gr generators: " << gens << "\n";
      }
      return 0;
    }

    if (fixed_cmd->parsed()) {
      require_n(n);
      FramingVector w = parse_framing(w_text, n);
      DimensionVector v = parse_dims(v_text, n, "--v");
      std::vector<FixedPointTuple> points = enumerate_fixed_points(n, w, v);
      if (json) {
        Json list = Json::array();
        for (const FixedPointTuple& t : points) list.push_back(to_json(t));
        Json doc{{"n", n},
                 {"w", w},
                 {"v", v},
                 {"count", points.size()},
                 {"fixed_points", list}};
        out << doc.dump(2) << "\n";
      } else {
        out << "count: " << points.size() << "\n";
        for (const FixedPointTuple& t : points) out << fixed_point_label(t) << "\n";
      }
      return 0;
    }

    if (tangent_cmd->parsed()) {
      require_n(n);
      FramingVector w = parse_framing(w_text, n);
      FixedPointTuple t = parse_fixed_point(n, w, fp_text);
      DimensionVector v = column_counts(t);
      CharacterSum character = tangent_character(t);
      AttractingDims dims = attracting_dimensions(t);
      long long ambient = handsaw_dimension(v, w);
      if (json) {
        Json doc{{"n", n},
                 {"w", w},
                 {"v", v},
                 {"fixed_point", to_json(t)},
                 {"dimQ", ambient},
                 {"dimS", dims.dim_s},
                 {"dimU", dims.dim_u},
                 {"terms", to_json(character)}};
        out << doc.dump(2) << "\n";
      } else {
        out << "fixed point: " << fixed_point_label(t) << "\n";
        out << "v: " << format_vector(v) << "\n";
        out << "dimQ: " << ambient << "  dimS: " << dims.dim_s << "  dimU: " << dims.dim_u
            << "\n";
        for (const TangentTerm& term : character.terms) {
          out << term.src.tier << "." << term.src.line << " -> " << term.dst.tier << "."
              << term.dst.line << ": " << tpower_str(term.tpower) << "\n";
        }
      }
      return 0;
    }

    if (smallness_cmd->parsed()) {
      require_n(n);
      FramingVector w = parse_framing(w_text, n);
      DimensionVector vmax = parse_dims(vmax_text, n, "--vmax");
      SmallnessReport report = verify_smallness(n, w, vmax, run_workers);
      if (json) {
        Json doc{{"n", n}, {"w", w}, {"vmax", vmax}};
        doc.update(to_json(report));
        out << doc.dump(2) << "\n";
      } else {
        out << "smallness: " << (report.pass ? "PASS" : "FAIL") << "\n";
        out << "checked vectors: " << report.checked_vectors << "\n";
        out << "checked strata: " << report.checked_strata << "\n";
        if (report.extremal) {
          out << "max dimU: " << report.max_dim_u << " at v=" << format_vector(report.extremal_v)
              << " fixed point " << fixed_point_label(*report.extremal) << "\n";
        }
        for (const SmallnessViolation& viol : report.violations)
          out << "violation at v=" << format_vector(viol.v) << ": " << viol.detail << "\n";
      }
      return report.pass ? 0 : 1;
    }

    if (betti_cmd->parsed()) {
      require_n(n);
      FramingVector w = parse_framing(w_text, n);
      DimensionVector vmax = parse_dims(vmax_text, n, "--vmax");
      BettiReport report = verify_betti(n, w, vmax, run_workers);
      if (json) {
        Json mismatches = Json::array();
        for (const DimensionVector& v : report.mismatches) mismatches.push_back(v);
        Json doc{{"n", n},
                 {"w", w},
                 {"vmax", vmax},
                 {"equal", report.equal},
                 {"lhs", to_json(report.lhs)},
                 {"rhs", to_json(report.rhs)},
                 {"mismatches", mismatches}};
        out << doc.dump(2) << "\n";
      } else {
        out << "betti: " << (report.equal ? "PASS" : "FAIL") << "\n";
        if (report.equal) {
          for (const auto& [v, poly] : report.lhs.terms()) {
            if (poly == LaurentPolynomial()) continue;
            out << "v=" << format_vector(v) << ": " << poly.str() << "\n";
          }
        } else {
          for (const DimensionVector& v : report.mismatches) {
            out << "v=" << format_vector(v) << ": fixed points "
                << report.lhs.coefficient(v).str() << " vs product "
                << report.rhs.coefficient(v).str() << "\n";
          }
        }
      }
      return report.equal ? 0 : 1;
    }

    if (strata_cmd->parsed() || character_cmd->parsed() || mult_cmd->parsed()) {
      Pyramid p = pyramid_from_columns(parse_int_list(columns_text));
      SpectralData data = SpectralData::from_pyramid(p, parse_zeros(zeros_text, p));
      DimensionVector vmax = parse_dims(vmax_text, p.n, "--vmax");
      Json inputs{{"pyramid", to_json(p)}, {"zeros", data.zeros}, {"vmax", vmax}};

      if (strata_cmd->parsed()) {
        std::vector<Stratum> layers = strata(data, vmax, run_workers);
        if (json) {
          Json list = Json::array();
          for (const Stratum& layer : layers)
            list.push_back(Json{{"v", layer.dims.underlying_v()},
                                {"dims", to_json(layer.dims)},
                                {"weight", to_json(layer.weight)}});
          Json doc = inputs;
          doc["count"] = layers.size();
          doc["strata"] = list;
          out << doc.dump(2) << "\n";
        } else {
          out << "count: " << layers.size() << "\n";
          for (std::size_t k = 0; k < layers.size(); ++k) {
            out << "[" << (k + 1) << "] v=" << format_vector(layers[k].dims.underlying_v())
                << "  " << format_graded_dims(layers[k].dims) << "\n";
            out << "    weight: " << format_ell_weight(layers[k].weight) << "\n";
          }
        }
        return 0;
      }

      if (character_cmd->parsed()) {
        std::vector<GtEntry> entries = gt_character(data, vmax, run_workers);
        if (json) {
          Json list = Json::array();
          for (const GtEntry& entry : entries)
            list.push_back(Json{{"multiplicity", json_int(entry.multiplicity)},
                                {"v", entry.dims.underlying_v()},
                                {"dims", to_json(entry.dims)},
                                {"weight", to_json(entry.weight)}});
          Json doc = inputs;
          doc["count"] = entries.size();
          doc["entries"] = list;
          out << doc.dump(2) << "\n";
        } else {
          out << "Gelfand-Tsetlin character: " << entries.size()
              << " l-weights (Euler-characteristic counts)\n";
          for (const GtEntry& entry : entries) {
            out << "[" << entry.multiplicity.str() << "] v="
                << format_vector(entry.dims.underlying_v())
                << " weight: " << format_ell_weight(entry.weight) << "\n";
          }
        }
        return 0;
      }

      KLTable table;
      std::vector<DecompositionRow> rows = decomposition_matrix(data, vmax, table, run_workers);
      if (json) {
        Json list = Json::array();
        for (const DecompositionRow& row : rows)
          list.push_back(Json{{"multiplicity", json_int(row.multiplicity)},
                              {"v", row.stratum.dims.underlying_v()},
                              {"dims", to_json(row.stratum.dims)},
                              {"weight", to_json(row.stratum.weight)}});
        Json doc = inputs;
        doc["strata"] = list;
        out << doc.dump(2) << "\n";
      } else {
        out << "composition multiplicities: " << rows.size() << " strata\n";
        for (const DecompositionRow& row : rows) {
          out << "[" << row.multiplicity.str() << "] v="
              << format_vector(row.stratum.dims.underlying_v())
              << " weight: " << format_ell_weight(row.stratum.weight) << "\n";
        }
      }
      return 0;
    }

    if (kl_cmd->parsed()) {
      Permutation x = parse_permutation(x_text);
      Permutation w = parse_permutation(wperm_text);
      if (x.size() != w.size())
        throw std::invalid_argument("--x and --w must have the same size");
      if (w.size() > max_perm)
        throw std::invalid_argument("permutations longer than " + std::to_string(max_perm) +
                                    " refused; raise --max-n to confirm the cost");
      KLTable table;
      LaurentPolynomial poly = table.polynomial(x, w);
      if (json) {
        Json doc{{"x", x.str()},
                 {"w", w.str()},
                 {"comparable", bruhat_le(x, w)},
                 {"polynomial", poly.str("q")},
                 {"value_at_one", json_int(poly.evaluate_at_one())}};
        out << doc.dump(2) << "\n";
      } else {
        out << "P[" << x.str() << ", " << w.str() << "] = " << poly.str("q") << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      AcceptanceOptions options;
      options.quick = quick;
      options.workers = run_workers;
      options.seed = seed;
      AcceptanceReport report = run_acceptance(options);
      if (json) {
        Json criteria = Json::array();
        for (const CriterionResult& c : report.criteria)
          criteria.push_back(
              Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        Json doc{{"quick", quick}, {"pass", report.pass}, {"criteria", criteria}};
        out << doc.dump(2) << "\n";
      } else {
        out << format_report(report);
      }
      return report.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command selected\n";
  return 2;
}

}  // namespace handsaw
