#include <doctest.h>

#include <stdexcept>

#include "handsaw/diagrams.hpp"

using namespace handsaw;

TEST_CASE("young diagram geometry") {
  // anchored at column 2, rows (3,1) upward: boxes at x=2..4 (y=1) and x=2 (y=2)
  YoungDiagram d{2, {3, 1}};
  CHECK(d.row_count() == 2);
  CHECK(d.width() == 3);
  CHECK(d.box_count() == 4);
  CHECK(d.row_length(1) == 3);
  CHECK(d.row_length(2) == 1);
  CHECK(d.row_length(3) == 0);
  CHECK(d.column_height(1) == 0);
  CHECK(d.column_height(2) == 2);
  CHECK(d.column_height(3) == 1);
  CHECK(d.column_height(4) == 1);
  CHECK(d.column_height(5) == 0);
  CHECK_THROWS_AS(d.row_length(0), std::invalid_argument);

  // leg runs horizontally to the end of the row, arm vertically up the column
  CHECK(leg_length(2, 1, d) == 2);
  CHECK(leg_length(4, 1, d) == 0);
  CHECK(leg_length(2, 2, d) == 0);
  CHECK(leg_length(3, 2, d) == -1);
  CHECK(leg_length(2, 3, d) == -1);
  CHECK(arm_length(2, 1, d) == 1);
  CHECK(arm_length(2, 2, d) == 0);
  CHECK(arm_length(4, 1, d) == 0);

  YoungDiagram empty{3, {}};
  CHECK(empty.empty());
  CHECK(empty.width() == 0);
  CHECK(leg_length(3, 1, empty) == -1);
  CHECK(leg_length(4, 1, empty) == -2);
}

TEST_CASE("line list and fixed point validation") {
  std::vector<LineRef> lines = line_list(3, {2, 0, 1});
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == LineRef{1, 1});
  CHECK(lines[1] == LineRef{1, 2});
  CHECK(lines[2] == LineRef{3, 1});
  CHECK_THROWS_AS(line_list(2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(line_list(2, {1, -1}), std::invalid_argument);

  FixedPointTuple t;
  t.n = 2;
  t.w = {1, 1};
  t.diagrams = {YoungDiagram{1, {1, 1}}, YoungDiagram{2, {}}};
  CHECK_NOTHROW(validate_fixed_point(t));
  CHECK(column_counts(t) == DimensionVector{2});
  CHECK(t.diagram(1, 1).rows == std::vector<int>{1, 1});

  // width above n - tier
  t.diagrams[0] = YoungDiagram{1, {2}};
  CHECK_THROWS_AS(validate_fixed_point(t), std::invalid_argument);
  // wrong anchor
  t.diagrams[0] = YoungDiagram{2, {1}};
  CHECK_THROWS_AS(validate_fixed_point(t), std::invalid_argument);
  // rows must be weakly decreasing and positive
  t.n = 3;
  t.w = {1, 0, 0};
  t.diagrams = {YoungDiagram{1, {1, 2}}};
  CHECK_THROWS_AS(validate_fixed_point(t), std::invalid_argument);
  t.diagrams = {YoungDiagram{1, {1, 0}}};
  CHECK_THROWS_AS(validate_fixed_point(t), std::invalid_argument);
}

TEST_CASE("exact enumeration in canonical order") {
  // two tier-1 lines of width <= 1 sharing two boxes: three ways
  std::vector<FixedPointTuple> points = enumerate_fixed_points(2, {2, 0}, {2});
  REQUIRE(points.size() == 3);
  CHECK(format_fixed_point(points[0]) == "1.2:[1,1]");
  CHECK(format_fixed_point(points[1]) == "1.1:[1];1.2:[1]");
  CHECK(format_fixed_point(points[2]) == "1.1:[1,1]");
  for (const FixedPointTuple& t : points) CHECK(column_counts(t) == DimensionVector{2});

  // wider strips: partitions of 2 in a 2-wide strip for a single line
  points = enumerate_fixed_points(3, {1, 0, 0}, {1, 1});
  REQUIRE(points.size() == 1);
  CHECK(points[0].diagram(1, 1).rows == std::vector<int>{2});

  points = enumerate_fixed_points(3, {1, 0, 0}, {2, 1});
  REQUIRE(points.size() == 1);
  CHECK(points[0].diagram(1, 1).rows == std::vector<int>{2, 1});

  // impossible budgets give nothing
  CHECK(enumerate_fixed_points(2, {0, 1}, {1}).empty());
  CHECK(enumerate_fixed_points(3, {0, 1, 0}, {1, 0}).empty());

  // n = 1: exactly the all-empty tuple
  points = enumerate_fixed_points(1, {3}, {});
  REQUIRE(points.size() == 1);
  CHECK(format_fixed_point(points[0]).empty());
}

TEST_CASE("bucketed enumeration agrees with exact enumeration") {
  int n = 3;
  FramingVector w = {1, 2, 0};
  DimensionVector vmax = {3, 2};
  auto buckets = enumerate_up_to(n, w, vmax);
  long long count = 0;
  for (int a = 0; a <= vmax[0]; ++a) {
    for (int b = 0; b <= vmax[1]; ++b) {
      std::vector<FixedPointTuple> exact = enumerate_fixed_points(n, w, {a, b});
      auto it = buckets.find({a, b});
      if (exact.empty()) {
        CHECK(it == buckets.end());
      } else {
        REQUIRE(it != buckets.end());
        CHECK(it->second == exact);
        count += static_cast<long long>(exact.size());
      }
    }
  }
  long long bucketed = 0;
  for (const auto& [v, tuples] : buckets) bucketed += static_cast<long long>(tuples.size());
  CHECK(bucketed == count);
}

TEST_CASE("bucketed enumeration is worker-invariant and respects the cap") {
  int n = 3;
  FramingVector w = {2, 1, 1};
  DimensionVector vmax = {3, 3};
  auto serial = enumerate_up_to(n, w, vmax, 4, 1);
  auto pooled = enumerate_up_to(n, w, vmax, 4, 3);
  CHECK(serial == pooled);
  for (const auto& [v, tuples] : serial) {
    CHECK(total(v) <= 4);
    for (const FixedPointTuple& t : tuples) CHECK(column_counts(t) == v);
  }

  // the cap only filters; it never reorders
  auto uncapped = enumerate_up_to(n, w, vmax, -1, 2);
  for (const auto& [v, tuples] : serial) {
    REQUIRE(uncapped.count(v) == 1);
    CHECK(uncapped.at(v) == tuples);
  }
}

TEST_CASE("fixed point parsing") {
  FramingVector w = {1, 1, 1};
  FixedPointTuple t = parse_fixed_point(3, w, "1.1:[2,1]");
  CHECK(t.diagram(1, 1).rows == std::vector<int>{2, 1});
  CHECK(t.diagram(2, 1).empty());
  CHECK(t.diagram(3, 1).empty());
  CHECK(format_fixed_point(t) == "1.1:[2,1]");
  CHECK(parse_fixed_point(3, w, "") ==
        FixedPointTuple{3, w, {YoungDiagram{1, {}}, YoungDiagram{2, {}}, YoungDiagram{3, {}}}});

  CHECK_THROWS_AS(parse_fixed_point(3, w, "1.1:[1];1.1:[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixed_point(3, w, "4.1:[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixed_point(3, w, "1.2:[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixed_point(3, w, "1.1:[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixed_point(3, w, "1.1:[3]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixed_point(3, w, "3.1:[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixed_point(3, w, "1.1:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixed_point(3, w, "1.1:[x]"), std::invalid_argument);
}
