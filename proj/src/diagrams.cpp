#include "handsaw/diagrams.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "handsaw/parallel.hpp"

namespace handsaw {

long long YoungDiagram::box_count() const {
  return std::accumulate(rows.begin(), rows.end(), 0LL);
}

int YoungDiagram::row_length(int y) const {
  if (y < 1) throw std::invalid_argument("row_length: y must be >= 1");
  return y <= row_count() ? rows[y - 1] : 0;
}

int YoungDiagram::column_height(int x) const {
  if (x < anchor) return 0;
  const int c = x - anchor + 1;  // 1-based column within the diagram
  int h = 0;
  while (h < row_count() && rows[h] >= c) ++h;
  return h;
}

int leg_length(int x, int y, const YoungDiagram& d) {
  return d.anchor + d.row_length(y) - 1 - x;
}

int arm_length(int x, int y, const YoungDiagram& d) {
  if (y < 1) throw std::invalid_argument("arm_length: y must be >= 1");
  return d.column_height(x) - y;
}

std::vector<LineRef> line_list(int n, const FramingVector& w) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("framing vector size != n");
  std::vector<LineRef> lines;
  for (int i = 1; i <= n; ++i) {
    if (w[i - 1] < 0) throw std::invalid_argument("framing entries must be >= 0");
    for (int alpha = 1; alpha <= w[i - 1]; ++alpha) lines.push_back({i, alpha});
  }
  return lines;
}

const YoungDiagram& FixedPointTuple::diagram(int tier, int line) const {
  if (tier < 1 || tier > n) throw std::invalid_argument("tier out of range");
  if (line < 1 || line > w[tier - 1]) throw std::invalid_argument("line out of range");
  int offset = 0;
  for (int i = 1; i < tier; ++i) offset += w[i - 1];
  return diagrams[offset + line - 1];
}

void validate_fixed_point(const FixedPointTuple& t) {
  auto lines = line_list(t.n, t.w);
  if (t.diagrams.size() != lines.size())
    throw std::invalid_argument("fixed point: wrong number of diagrams");
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const YoungDiagram& d = t.diagrams[k];
    if (d.anchor != lines[k].tier) throw std::invalid_argument("fixed point: bad anchor");
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      if (d.rows[r] <= 0) throw std::invalid_argument("fixed point: nonpositive row");
      if (r > 0 && d.rows[r] > d.rows[r - 1])
        throw std::invalid_argument("fixed point: rows not weakly decreasing");
    }
    if (d.width() > t.n - lines[k].tier)
      throw std::invalid_argument("fixed point: diagram too wide for its tier");
  }
}

DimensionVector column_counts(const FixedPointTuple& t) {
  DimensionVector v(t.n - 1, 0);
  for (const YoungDiagram& d : t.diagrams)
    for (int x = d.anchor; x <= d.anchor + d.width() - 1; ++x) v[x - 1] += d.column_height(x);
  return v;
}

namespace {

// Depth-first walk over all diagram tuples within a per-column budget. The
// per-line partitions are generated lexicographically, which fixes the
// canonical order everything downstream relies on.
class TupleWalker {
 public:
  TupleWalker(int n, const FramingVector& w, DimensionVector budget, long long total_cap,
              bool exact)
      : n_(n),
        w_(w),
        rem_(std::move(budget)),
        total_rem_(total_cap),
        exact_(exact),
        lines_(line_list(n, w)) {
    if (static_cast<int>(rem_.size()) != n - 1)
      throw std::invalid_argument("dimension vector must have n-1 entries");
    for (int x : rem_)
      if (x < 0) throw std::invalid_argument("dimension vector entries must be >= 0");
    if (total_rem_ < 0) total_rem_ = total(rem_);
    diagrams_.resize(lines_.size());
    for (std::size_t k = 0; k < lines_.size(); ++k) diagrams_[k].anchor = lines_[k].tier;
  }

  // Visits tuples whose first-line partition index lies in [lo, hi); hi < 0
  // means no restriction. Counts the first-line candidates either way.
  long long run(const std::function<void(const FixedPointTuple&)>& sink, long long lo = 0,
                long long hi = -1) {
    sink_ = &sink;
    first_lo_ = lo;
    first_hi_ = hi;
    first_count_ = 0;
    if (lines_.empty()) {
      if (first_hi_ < 0 || (first_lo_ <= 0 && 0 < first_hi_))
        if (!exact_ || is_zero(rem_)) emit();
      first_count_ = 1;
      return first_count_;
    }
    descend_into(0);
    return first_count_;
  }

 private:
  void emit() {
    FixedPointTuple t{n_, w_, diagrams_};
    (*sink_)(t);
  }

  // Columns strictly left of `tier` can no longer receive boxes; in exact
  // mode they must already be used up.
  bool boundary_ok(int tier) const {
    if (!exact_) return true;
    for (int j = 1; j < tier && j <= n_ - 1; ++j)
      if (rem_[j - 1] != 0) return false;
    return true;
  }

  void descend_into(std::size_t li) {
    if (li == lines_.size()) {
      if (!exact_ || is_zero(rem_)) emit();
      return;
    }
    int tier = lines_[li].tier;
    int prev_tier = (li == 0) ? 0 : lines_[li - 1].tier;
    if (tier != prev_tier && !boundary_ok(tier)) return;
    diagrams_[li].rows.clear();
    extend_rows(li, n_ - tier);
  }

  void accept_line(std::size_t li) {
    if (li == 0) {
      long long idx = first_count_++;
      if (first_hi_ >= 0 && (idx < first_lo_ || idx >= first_hi_)) return;
    }
    descend_into(li + 1);
  }

  // Accepts the partition built so far for line li, then tries to append one
  // more row of each feasible length (ascending, <= max_len).
  void extend_rows(std::size_t li, int max_len) {
    accept_line(li);
    const int tier = lines_[li].tier;
    YoungDiagram& d = diagrams_[li];
    for (int len = 1; len <= max_len; ++len) {
      if (total_rem_ < len) break;
      // Columns tier..tier+len-2 were checked at earlier iterations and the
      // budget is unchanged since, so only the newly reached column matters.
      if (rem_[tier + len - 2] < 1) break;
      for (int x = tier; x <= tier + len - 1; ++x) --rem_[x - 1];
      total_rem_ -= len;
      d.rows.push_back(len);
      extend_rows(li, len);
      d.rows.pop_back();
      total_rem_ += len;
      for (int x = tier; x <= tier + len - 1; ++x) ++rem_[x - 1];
    }
  }

  int n_;
  const FramingVector& w_;
  DimensionVector rem_;
  long long total_rem_;
  bool exact_;
  std::vector<LineRef> lines_;
  std::vector<YoungDiagram> diagrams_;
  const std::function<void(const FixedPointTuple&)>* sink_ = nullptr;
  long long first_lo_ = 0, first_hi_ = -1, first_count_ = 0;
};

}  // namespace

std::vector<FixedPointTuple> enumerate_fixed_points(int n, const FramingVector& w,
                                                    const DimensionVector& v) {
  std::vector<FixedPointTuple> out;
  TupleWalker walker(n, w, v, total(v), /*exact=*/true);
  std::function<void(const FixedPointTuple&)> sink = [&](const FixedPointTuple& t) {
    out.push_back(t);
  };
  walker.run(sink);
  return out;
}

std::map<DimensionVector, std::vector<FixedPointTuple>> enumerate_up_to(
    int n, const FramingVector& w, const DimensionVector& vmax, long long total_cap,
    int workers) {
  using Buckets = std::map<DimensionVector, std::vector<FixedPointTuple>>;
  auto walk_range = [&](long long lo, long long hi) {
    Buckets buckets;
    TupleWalker walker(n, w, vmax, total_cap, /*exact=*/false);
    std::function<void(const FixedPointTuple&)> sink = [&](const FixedPointTuple& t) {
      buckets[column_counts(t)].push_back(t);
    };
    walker.run(sink, lo, hi);
    return buckets;
  };
  if (workers <= 1) return walk_range(0, -1);

  // Count the first-line candidates, then fan out over them; merging chunk
  // buckets in index order reproduces the serial enumeration order exactly.
  long long candidates = 0;
  {
    TupleWalker counter(n, w, vmax, total_cap, /*exact=*/false);
    std::function<void(const FixedPointTuple&)> drop = [](const FixedPointTuple&) {};
    candidates = counter.run(drop, 0, 0);
  }
  auto chunks = parallel_map<Buckets>(static_cast<std::size_t>(candidates), workers,
                                      [&](std::size_t i) {
                                        return walk_range(static_cast<long long>(i),
                                                          static_cast<long long>(i) + 1);
                                      });
  Buckets merged;
  for (auto& chunk : chunks)
    for (auto& [v, tuples] : chunk) {
      auto& dst = merged[v];
      dst.insert(dst.end(), tuples.begin(), tuples.end());
    }
  return merged;
}

std::string format_fixed_point(const FixedPointTuple& t) {
  std::ostringstream os;
  auto lines = line_list(t.n, t.w);
  bool first = true;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const YoungDiagram& d = t.diagrams[k];
    if (d.empty()) continue;
    if (!first) os << ";";
    first = false;
    os << lines[k].tier << "." << lines[k].line << ":[";
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
      if (r) os << ",";
      os << d.rows[r];
    }
    os << "]";
  }
  return os.str();
}

namespace {

int parse_int_strict(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("fixed point: empty number");
  std::size_t pos = 0;
  int value = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("fixed point: bad number '" + s + "'");
  return value;
}

}  // namespace

FixedPointTuple parse_fixed_point(int n, const FramingVector& w, const std::string& text) {
  auto lines = line_list(n, w);
  FixedPointTuple t{n, w, std::vector<YoungDiagram>(lines.size())};
  for (std::size_t k = 0; k < lines.size(); ++k) t.diagrams[k].anchor = lines[k].tier;

  std::vector<bool> seen(lines.size(), false);
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    auto dot = part.find('.');
    auto colon = part.find(':');
    if (dot == std::string::npos || colon == std::string::npos || colon < dot)
      throw std::invalid_argument("fixed point: expected 'i.alpha:[rows]' in '" + part + "'");
    int tier = parse_int_strict(part.substr(0, dot));
    int line = parse_int_strict(part.substr(dot + 1, colon - dot - 1));
    if (tier < 1 || tier > n) throw std::invalid_argument("fixed point: tier out of range");
    if (line < 1 || line > w[tier - 1])
      throw std::invalid_argument("fixed point: line out of range");
    std::string body = part.substr(colon + 1);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw std::invalid_argument("fixed point: expected [rows] in '" + part + "'");
    body = body.substr(1, body.size() - 2);
    std::vector<int> rows;
    if (!body.empty()) {
      std::stringstream rs(body);
      std::string num;
      while (std::getline(rs, num, ',')) rows.push_back(parse_int_strict(num));
    }
    int offset = 0;
    for (int i = 1; i < tier; ++i) offset += w[i - 1];
    std::size_t idx = offset + line - 1;
    if (seen[idx]) throw std::invalid_argument("fixed point: duplicate line");
    seen[idx] = true;
    t.diagrams[idx].rows = std::move(rows);
  }
  validate_fixed_point(t);
  return t;
}

}  // namespace handsaw
