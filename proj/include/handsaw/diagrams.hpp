#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "handsaw/dimvec.hpp"

namespace handsaw {

// Young diagram drawn in the plane with its bottom-left box in column
// x = anchor. rows[k] is the length of row k+1 (y = k+1, counted upward),
// weakly decreasing and positive. Boxes are 1-based pairs (x, y).
struct YoungDiagram {
  int anchor = 1;
  std::vector<int> rows;

  bool empty() const { return rows.empty(); }
  int row_count() const { return static_cast<int>(rows.size()); }
  int width() const { return rows.empty() ? 0 : rows.front(); }
  long long box_count() const;
  // Length of row y; zero for rows above the diagram.
  int row_length(int y) const;
  // Number of boxes in column x (zero left of the anchor or past the width).
  int column_height(int x) const;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
    return a.anchor == b.anchor && a.rows == b.rows;
  }
  friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
    return a.anchor != b.anchor ? a.anchor < b.anchor : a.rows < b.rows;
  }
};

// Horizontal distance from the box (x,y) to the rightmost box of row y of d
// (to x = anchor-1 when that row is empty). Negative once (x,y) sits past the
// end of the row.
int leg_length(int x, int y, const YoungDiagram& d);
// Vertical distance from (x,y) to the topmost box of column x of d (to y = 0
// when that column is empty).
int arm_length(int x, int y, const YoungDiagram& d);

struct LineRef {
  int tier = 0;  // i in 1..n
  int line = 0;  // alpha in 1..w_i

  friend bool operator==(const LineRef& a, const LineRef& b) {
    return a.tier == b.tier && a.line == b.line;
  }
  friend bool operator<(const LineRef& a, const LineRef& b) {
    return a.tier != b.tier ? a.tier < b.tier : a.line < b.line;
  }
};

// Framing lines in (tier, line) lexicographic order.
std::vector<LineRef> line_list(int n, const FramingVector& w);

// Torus fixed point: one Young diagram per framing line, the diagram of line
// (i, alpha) anchored at column i with width <= n-i (tier n carries only the
// empty diagram).
struct FixedPointTuple {
  int n = 0;
  FramingVector w;
  std::vector<YoungDiagram> diagrams;  // line_list order, empty diagrams included

  const YoungDiagram& diagram(int tier, int line) const;

  friend bool operator==(const FixedPointTuple& a, const FixedPointTuple& b) {
    return a.n == b.n && a.w == b.w && a.diagrams == b.diagrams;
  }
  friend bool operator<(const FixedPointTuple& a, const FixedPointTuple& b) {
    return a.diagrams < b.diagrams;
  }
};

// Throws std::invalid_argument when shapes or anchors are inconsistent.
void validate_fixed_point(const FixedPointTuple& t);

// v_j = total boxes in column j across all diagrams, j in 1..n-1.
DimensionVector column_counts(const FixedPointTuple& t);

// All fixed points with column_counts == v, in the canonical order: lines in
// line_list order, each line's partition enumerated lexicographically
// ([] < [1] < [1,1] < [2] < ...), whole tuples ordered by the induced
// depth-first order.
std::vector<FixedPointTuple> enumerate_fixed_points(int n, const FramingVector& w,
                                                    const DimensionVector& v);

// Buckets every fixed point with column_counts <= vmax (and total boxes
// <= total_cap when total_cap >= 0) by its dimension vector. Each bucket
// preserves the canonical enumeration order regardless of the worker count.
std::map<DimensionVector, std::vector<FixedPointTuple>> enumerate_up_to(
    int n, const FramingVector& w, const DimensionVector& vmax, long long total_cap = -1,
    int workers = 1);

// "1.1:[2,1];2.1:[1]" -- empty diagrams omitted; the all-empty tuple is "".
std::string format_fixed_point(const FixedPointTuple& t);
FixedPointTuple parse_fixed_point(int n, const FramingVector& w, const std::string& text);

}  // namespace handsaw
