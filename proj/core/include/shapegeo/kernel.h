#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "shapegeo/rational.h"

namespace shapegeo {

// Base of every error raised for geometrically meaningless input.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLineError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DegenerateSegmentError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class IdenticalLinesError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2&, const Point2&) = default;
};

std::string to_string(const Point2& p);

// Line a*x + b*y + c = 0 with integer coefficients, gcd-reduced and
// sign-normalized (a > 0, or a == 0 and b > 0). Two LineEq compare equal
// exactly when they describe the same line.
class LineEq {
 public:
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  bool is_vertical() const { return b_ == 0; }

  friend bool operator==(const LineEq& lhs, const LineEq& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_;
  }
  friend std::strong_ordering operator<=>(const LineEq& lhs, const LineEq& rhs);

 private:
  LineEq(BigInt a, BigInt b, BigInt c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  friend LineEq canonical_line(const Rational&, const Rational&, const Rational&);

  BigInt a_;
  BigInt b_;
  BigInt c_;
};

std::string to_string(const LineEq& line);

// Throws InvalidLineError when a == b == 0.
LineEq canonical_line(const Rational& a, const Rational& b, const Rational& c);

// Throws DegenerateSegmentError when p == q.
LineEq line_through(const Point2& p, const Point2& q);

bool point_on_line(const Point2& p, const LineEq& line);

bool are_parallel(const LineEq& l1, const LineEq& l2);

// Meeting point of two distinct lines, or nullopt when they are parallel.
// Throws IdenticalLinesError when l1 == l2.
std::optional<Point2> intersect(const LineEq& l1, const LineEq& l2);

// Position of a point along a line: x for non-vertical lines, y for vertical
// ones. Monotone along the line, so 1-D interval reasoning on a carrier can
// use it directly.
Rational line_parameter(const LineEq& line, const Point2& p);

// Inverse of line_parameter for points on `line`.
Point2 point_at_parameter(const LineEq& line, const Rational& t);

// Closed, positive-length straight segment. Endpoints are kept in
// lexicographic (x, y) order, so equality is endpoint-set equality.
class Segment {
 public:
  // Throws DegenerateSegmentError when p == q.
  Segment(Point2 p, Point2 q);

  const Point2& p1() const { return p1_; }
  const Point2& p2() const { return p2_; }
  LineEq carrier() const { return line_through(p1_, p2_); }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend std::strong_ordering operator<=>(const Segment&, const Segment&) = default;

 private:
  Point2 p1_;
  Point2 p2_;
};

std::string to_string(const Segment& s);

enum class CoClass {
  DistinctCarriers,
  CollinearDisjoint,
  AdjacentCollinear,
  OverlappingCollinear,
};

const char* to_string(CoClass c);

CoClass co_classify(const Segment& s1, const Segment& s2);

// The `co` relation: collinear segments that touch or overlap.
inline bool co_related(const Segment& s1, const Segment& s2) {
  CoClass c = co_classify(s1, s2);
  return c == CoClass::AdjacentCollinear || c == CoClass::OverlappingCollinear;
}

}  // namespace shapegeo
