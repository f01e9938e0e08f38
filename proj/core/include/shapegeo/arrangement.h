#pragma once

#include <optional>
#include <set>
#include <utility>

#include "shapegeo/kernel.h"
#include "shapegeo/shape.h"

namespace shapegeo {

// Any pair of point and line sets. Nothing is guaranteed about it; use
// validate() to check it against the arrangement axioms.
struct RawPointLineSet {
  std::set<Point2> points;
  std::set<LineEq> lines;

  friend bool operator==(const RawPointLineSet&, const RawPointLineSet&) = default;
};

// Unordered pair of lines, stored with first < second.
using LinePair = std::pair<LineEq, LineEq>;

LinePair make_line_pair(LineEq l1, LineEq l2);

struct AxiomReport {
  bool valid = true;
  // Points of P lying on fewer than two lines of L.
  std::set<Point2> violations_rule1;
  // Nonparallel pairs of L whose meeting point is missing from P.
  std::set<LinePair> violations_rule2;
};

// Checks both axioms exhaustively and reports every violation:
//  (1) every point of P lies on at least two lines of L;
//  (2) every two nonparallel lines of L meet at a point of P.
AxiomReport validate(const RawPointLineSet& raw);

// Registration marks and construction lines satisfying both axioms. Only
// obtainable from a shape, or from a raw set that passes validate().
class Arrangement {
 public:
  // The empty arrangement.
  Arrangement() = default;

  static std::optional<Arrangement> from_raw(const RawPointLineSet& raw);

  const std::set<Point2>& points() const { return data_.points; }
  const std::set<LineEq>& lines() const { return data_.lines; }
  const RawPointLineSet& as_raw() const { return data_; }
  bool empty() const { return data_.lines.empty(); }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  explicit Arrangement(RawPointLineSet data) : data_(std::move(data)) {}
  friend Arrangement arrangement_of(const Shape& s);

  RawPointLineSet data_;
};

// L is the set of carriers of the segments of s; P is every meeting point of
// two distinct nonparallel carriers, whether or not it lies on a segment.
Arrangement arrangement_of(const Shape& s);

// Union, difference and intersection defined through the shape operations.
Arrangement arr_union(const Shape& s1, const Shape& s2);
Arrangement arr_difference(const Shape& s1, const Shape& s2);
Arrangement arr_intersection(const Shape& s1, const Shape& s2);

// Component-wise set operations. The result need not be an arrangement.
RawPointLineSet naive_union(const Arrangement& a1, const Arrangement& a2);
RawPointLineSet naive_difference(const Arrangement& a1, const Arrangement& a2);
RawPointLineSet naive_intersection(const Arrangement& a1, const Arrangement& a2);

}  // namespace shapegeo
