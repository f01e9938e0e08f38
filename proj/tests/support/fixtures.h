// Shared fixtures and random generators for the unit and acceptance suites.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shapegeo/arrangement.h"
#include "shapegeo/incidence.h"
#include "shapegeo/shape.h"

namespace shapegeo::testing {

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

inline Point2 pt(std::int64_t x, std::int64_t y) { return Point2{q(x), q(y)}; }

inline Segment seg(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
  return Segment(pt(x1, y1), pt(x2, y2));
}

inline LineEq line(std::int64_t a, std::int64_t b, std::int64_t c) {
  return canonical_line(q(a), q(b), q(c));
}

inline Shape shape(std::vector<Segment> segments) { return Shape::reduce(segments); }

inline Shape triangle() { return shape({seg(0, 0, 2, 0), seg(0, 0, 1, 2), seg(2, 0, 1, 2)}); }

inline Shape unit_square() {
  return shape({seg(0, 0, 1, 0), seg(1, 0, 1, 1), seg(1, 1, 0, 1), seg(0, 1, 0, 0)});
}

inline Shape single_segment() { return shape({seg(0, 0, 1, 0)}); }

inline Shape parallel_pair() { return shape({seg(0, 0, 1, 0), seg(0, 1, 1, 1)}); }

inline Shape parallels_and_transversal() {
  return shape({seg(0, 0, 0, 2), seg(2, 0, 2, 2), seg(0, 1, 2, 1)});
}

inline Shape x_shape() { return shape({seg(-1, -1, 1, 1), seg(-1, 1, 1, -1)}); }

// Three lines through the origin.
inline Shape pencil() { return shape({seg(-1, 0, 1, 0), seg(0, -1, 0, 1), seg(-1, -1, 1, 1)}); }

// Pappus configuration: A1 A2 A3 on y = 0, B1 B2 B3 on y = 2, the three
// cross points and the line through them.
inline RawPointLineSet pappus() {
  RawPointLineSet raw;
  raw.points = {pt(0, 0),           pt(1, 0),           pt(3, 0),
                pt(0, 2),           pt(2, 2),           pt(5, 2),
                {q(2, 3), q(2, 3)}, {q(15, 8), q(3, 4)}, {q(13, 5), q(4, 5)}};
  raw.lines = {line(0, 1, -2), line(0, 1, 0),    line(1, -2, -1),
               line(1, -1, 0), line(2, -29, 18), line(2, -5, 0),
               line(2, 1, -6), line(2, 1, -2),   line(2, 3, -6)};
  return raw;
}

// Desargues configuration: triangles perspective from the origin and their
// axis of perspectivity.
inline RawPointLineSet desargues() {
  RawPointLineSet raw;
  raw.points = {pt(-10, -29), {q(-5, 2), q(-5)}, pt(-1, -2), pt(0, 0), pt(0, 1),
                pt(0, 3),     pt(1, 0),          pt(2, 0),   pt(4, -3), pt(11, 10)};
  raw.lines = {line(0, 1, 0),   line(1, -1, -1), line(1, 0, 0),    line(1, 1, -1),
               line(2, -1, 0),  line(3, -1, 1),  line(3, 2, -6),   line(10, -9, -20),
               line(13, -7, -73), line(16, -5, 15)};
  return raw;
}

// Random rational in [-10, 10] with denominator in 1..4.
inline Rational random_coord(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den_dist(1, 4);
  int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(-10 * den, 10 * den);
  return q(num_dist(rng), den);
}

inline Segment random_segment(std::mt19937_64& rng) {
  for (;;) {
    Point2 a{random_coord(rng), random_coord(rng)};
    Point2 b{random_coord(rng), random_coord(rng)};
    if (a != b) return Segment(a, b);
  }
}

// Segment whose endpoints lie on a small integer grid, so carriers repeat
// and collinear, parallel and concurrent configurations are common.
inline Segment random_grid_segment(std::mt19937_64& rng, int extent = 3) {
  std::uniform_int_distribution<int> c(-extent, extent);
  for (;;) {
    Point2 a = pt(c(rng), c(rng));
    Point2 b = pt(c(rng), c(rng));
    if (a != b) return Segment(a, b);
  }
}

// Up to `max_segments` random segments, reduced.
inline Shape random_shape(std::mt19937_64& rng, int max_segments = 8) {
  std::uniform_int_distribution<int> count(0, max_segments);
  std::vector<Segment> segments;
  for (int n = count(rng); n > 0; --n) segments.push_back(random_segment(rng));
  return Shape::reduce(segments);
}

inline Shape random_grid_shape(std::mt19937_64& rng, int max_segments = 6, int extent = 3) {
  std::uniform_int_distribution<int> count(0, max_segments);
  std::vector<Segment> segments;
  for (int n = count(rng); n > 0; --n) segments.push_back(random_grid_segment(rng, extent));
  return Shape::reduce(segments);
}

// Random invertible similarity: rotation by a Pythagorean pair, optional
// reflection, uniform scale and translation.
inline AffineMap random_similarity(std::mt19937_64& rng) {
  static const std::pair<int, int> kTriples[][2] = {
      {{1, 1}, {0, 1}}, {{3, 5}, {4, 5}}, {{4, 5}, {3, 5}}, {{5, 13}, {12, 13}},
      {{8, 17}, {15, 17}}, {{0, 1}, {1, 1}}, {{7, 25}, {24, 25}}};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kTriples) - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  const auto& t = kTriples[pick(rng)];
  Rational cos = q(t[0].first, t[0].second);
  Rational sin = q(t[1].first, t[1].second);
  if (sign(rng)) cos = -cos;
  if (sign(rng)) sin = -sin;
  AffineMap m = AffineMap::rotation(cos, sin);
  if (sign(rng)) m = AffineMap::reflect_x_axis().then_after(m);
  std::uniform_int_distribution<int> scale_num(1, 6);
  std::uniform_int_distribution<int> scale_den(1, 3);
  m = AffineMap::scaling(q(scale_num(rng), scale_den(rng))).then_after(m);
  return AffineMap::translation(random_coord(rng), random_coord(rng)).then_after(m);
}

// Point-set coverage oracle: every candidate point (endpoints, midpoints and
// pairwise carrier intersections of both segment lists) is covered by one
// list iff it is covered by the other.
inline bool covered_by(const std::vector<Segment>& segments, const Point2& p) {
  for (const Segment& s : segments) {
    Rational cross = (s.p2().x - s.p1().x) * (p.y - s.p1().y) -
                     (s.p2().y - s.p1().y) * (p.x - s.p1().x);
    if (!cross.is_zero()) continue;
    if (std::min(s.p1().x, s.p2().x) <= p.x && p.x <= std::max(s.p1().x, s.p2().x) &&
        std::min(s.p1().y, s.p2().y) <= p.y && p.y <= std::max(s.p1().y, s.p2().y)) {
      return true;
    }
  }
  return false;
}

inline std::vector<Point2> sample_points(const std::vector<Segment>& a,
                                         const std::vector<Segment>& b) {
  std::vector<Segment> all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::vector<Point2> out;
  for (const Segment& s : all) {
    out.push_back(s.p1());
    out.push_back(s.p2());
    out.push_back({(s.p1().x + s.p2().x) / 2, (s.p1().y + s.p2().y) / 2});
    // quarter points catch gaps between pieces that share a midpoint
    out.push_back({(s.p1().x * 3 + s.p2().x) / 4, (s.p1().y * 3 + s.p2().y) / 4});
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      LineEq l1 = all[i].carrier();
      LineEq l2 = all[j].carrier();
      if (l1 == l2) continue;
      if (auto m = intersect(l1, l2)) out.push_back(*m);
    }
  }
  // Midpoints between consecutive sample points on each carrier.
  std::vector<Point2> extra;
  for (const Segment& s : all) {
    LineEq l = s.carrier();
    std::vector<Point2> on;
    for (const Point2& p : out) {
      if (point_on_line(p, l)) on.push_back(p);
    }
    std::sort(on.begin(), on.end());
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
      extra.push_back({(on[k].x + on[k + 1].x) / 2, (on[k].y + on[k + 1].y) / 2});
    }
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

inline bool same_point_set(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  for (const Point2& p : sample_points(a, b)) {
    if (covered_by(a, p) != covered_by(b, p)) return false;
  }
  return true;
}

}  // namespace shapegeo::testing
