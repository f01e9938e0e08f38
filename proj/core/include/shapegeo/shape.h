#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shapegeo/kernel.h"

namespace shapegeo {

class InvalidTransformError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// A finite set of maximal segments: no two members are adjacent or
// overlapping collinear. Segments are kept sorted, so two shapes are equal
// exactly when their segment sets are.
class Shape {
 public:
  // The empty shape.
  Shape() = default;

  // Reduces an arbitrary list of segments to maximal form. Collinear pieces
  // that touch or overlap are merged; gaps are kept.
  static Shape reduce(std::span<const Segment> raw);

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }

  // Distinct carrier lines, sorted.
  std::vector<LineEq> carriers() const;

  // True when p lies on some segment (endpoints included).
  bool covers(const Point2& p) const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<Segment> segments_;
};

Shape sum(const Shape& s1, const Shape& s2);
Shape difference(const Shape& s1, const Shape& s2);
Shape product(const Shape& s1, const Shape& s2);

inline bool shapes_equal(const Shape& s1, const Shape& s2) { return s1 == s2; }

// x' = m11 x + m12 y + tx, y' = m21 x + m22 y + ty, restricted to
// similarities: translations, rotations with rational (cos, sin),
// reflections and uniform scalings.
class AffineMap {
 public:
  // Throws InvalidTransformError unless the matrix is an invertible
  // similarity.
  AffineMap(Rational m11, Rational m12, Rational m21, Rational m22,
            Rational tx, Rational ty);

  static AffineMap identity();
  static AffineMap translation(Rational tx, Rational ty);
  static AffineMap scaling(Rational factor);
  // Requires cos^2 + sin^2 == 1.
  static AffineMap rotation(Rational cos, Rational sin);
  static AffineMap reflect_x_axis();
  static AffineMap reflect_y_axis();

  // (this * other)(p) == this(other(p))
  AffineMap then_after(const AffineMap& other) const;

  Point2 apply(const Point2& p) const;

  const Rational& m11() const { return m11_; }
  const Rational& m12() const { return m12_; }
  const Rational& m21() const { return m21_; }
  const Rational& m22() const { return m22_; }
  const Rational& tx() const { return tx_; }
  const Rational& ty() const { return ty_; }

 private:
  Rational m11_, m12_, m21_, m22_, tx_, ty_;
};

Shape transform(const Shape& s, const AffineMap& t);

}  // namespace shapegeo
