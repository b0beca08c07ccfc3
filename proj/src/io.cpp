#include "handsaw/io.hpp"

#include <sstream>
#include <stdexcept>

namespace handsaw {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t pos = 0;
    out.push_back(std::stoi(part, &pos));
    if (pos != part.size()) throw std::invalid_argument("bad integer '" + part + "'");
  }
  return out;
}

std::vector<std::vector<long long>> parse_zeros(const std::string& text, const Pyramid& p) {
  std::vector<std::vector<long long>> zeros(p.n);
  std::vector<bool> seen(p.n, false);
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    auto colon = group.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("zeros: expected 'tier:list' in '" + group + "'");
    std::size_t pos = 0;
    int tier = std::stoi(group.substr(0, colon), &pos);
    if (pos != colon) throw std::invalid_argument("zeros: bad tier in '" + group + "'");
    if (tier < 1 || tier > p.n) throw std::invalid_argument("zeros: tier out of range");
    if (seen[tier - 1]) throw std::invalid_argument("zeros: duplicate tier");
    seen[tier - 1] = true;
    std::stringstream vals(group.substr(colon + 1));
    std::string num;
    while (std::getline(vals, num, ',')) {
      if (num.empty()) throw std::invalid_argument("zeros: empty entry");
      pos = 0;
      zeros[tier - 1].push_back(std::stoll(num, &pos));
      if (pos != num.size()) throw std::invalid_argument("zeros: bad integer '" + num + "'");
    }
  }
  for (int i = 1; i <= p.n; ++i)
    if (static_cast<int>(zeros[i - 1].size()) != p.rows[i - 1])
      throw std::invalid_argument("zeros: tier " + std::to_string(i) + " needs " +
                                  std::to_string(p.rows[i - 1]) + " entries");
  return zeros;
}

Json to_json(const Pyramid& p) {
  return Json{{"columns", p.columns}, {"n", p.n},         {"p", p.rows},
              {"N", p.boxes},         {"pivot", p.pivot}, {"level", p.level()}};
}

Json to_json(const ShiftMatrix& s) {
  Json rows = Json::array();
  for (const auto& row : s.s) rows.push_back(row);
  return rows;
}

Json to_json(const FixedPointTuple& t) {
  Json lines = Json::array();
  auto refs = line_list(t.n, t.w);
  for (std::size_t k = 0; k < refs.size(); ++k) {
    if (t.diagrams[k].empty()) continue;
    lines.push_back(
        Json{{"tier", refs[k].tier}, {"line", refs[k].line}, {"rows", t.diagrams[k].rows}});
  }
  return lines;
}

Json to_json(const CharacterSum& c) {
  Json terms = Json::array();
  for (const TangentTerm& term : c.terms)
    terms.push_back(Json{{"src", {term.src.tier, term.src.line}},
                         {"dst", {term.dst.tier, term.dst.line}},
                         {"tpower", term.tpower}});
  return terms;
}

Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [v, poly] : s.terms())
    terms.push_back(Json{{"v", v}, {"poly", poly.str()}});
  return terms;
}

Json to_json(const SmallnessReport& r) {
  Json violations = Json::array();
  for (const auto& viol : r.violations)
    violations.push_back(Json{{"v", viol.v}, {"detail", viol.detail}});
  Json out{{"pass", r.pass},
           {"checked_vectors", r.checked_vectors},
           {"checked_strata", r.checked_strata},
           {"max_dimU", r.max_dim_u},
           {"violations", violations}};
  if (r.extremal) {
    out["extremal_v"] = r.extremal_v;
    out["extremal"] = format_fixed_point(*r.extremal);
  }
  return out;
}

Json to_json(const GradedDimVector& g) {
  Json v = Json::array(), w = Json::array();
  for (const auto& [key, c] : g.v)
    v.push_back(Json{{"tier", key.first}, {"eigenvalue", key.second}, {"dim", c}});
  for (const auto& [key, c] : g.w)
    w.push_back(Json{{"tier", key.first}, {"eigenvalue", key.second}, {"dim", c}});
  return Json{{"v", v}, {"w", w}};
}

Json to_json(const EllWeight& w) {
  Json tiers = Json::array();
  for (const auto& tier : w.tiers) {
    Json factors = Json::array();
    for (const auto& [root, exp] : tier.exponents())
      factors.push_back(Json{{"root", root}, {"exp", exp}});
    tiers.push_back(factors);
  }
  return tiers;
}

std::string format_shift_matrix(const ShiftMatrix& s) {
  std::ostringstream os;
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (j) os << " ";
      os << s.s[i][j];
    }
    os << "\n";
  }
  return os.str();
}

std::string format_graded_dims(const GradedDimVector& g) {
  std::ostringstream os;
  os << "V:";
  if (g.v.empty()) os << " -";
  for (const auto& [key, c] : g.v)
    os << " (" << key.first << "," << key.second << ")=" << c;
  os << "  W:";
  if (g.w.empty()) os << " -";
  for (const auto& [key, c] : g.w)
    os << " (" << key.first << "," << key.second << ")=" << c;
  return os.str();
}

std::string format_ell_weight(const EllWeight& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.tiers.size(); ++i) {
    if (i) os << " ; ";
    os << w.tiers[i].str();
  }
  return os.str();
}

}  // namespace handsaw
