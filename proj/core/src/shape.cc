#include "shapegeo/shape.h"

#include <algorithm>
#include <map>

namespace shapegeo {
namespace {

struct Interval {
  Rational lo;
  Rational hi;
};

using CarrierMap = std::map<LineEq, std::vector<Interval>>;

CarrierMap group_by_carrier(std::span<const Segment> segments) {
  CarrierMap out;
  for (const Segment& s : segments) {
    LineEq line = s.carrier();
    Interval iv{line_parameter(line, s.p1()), line_parameter(line, s.p2())};
    out[line].push_back(std::move(iv));
  }
  return out;
}

// Sorts and merges touching or overlapping intervals.
std::vector<Interval> merge(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (Interval& iv : intervals) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

// `intervals` must be merged (sorted, pairwise separated by gaps).
void emit(const LineEq& line, const std::vector<Interval>& intervals,
          std::vector<Segment>& out) {
  for (const Interval& iv : intervals) {
    out.emplace_back(point_at_parameter(line, iv.lo), point_at_parameter(line, iv.hi));
  }
}

Shape from_carriers(const CarrierMap& carriers) {
  std::vector<Segment> segments;
  for (const auto& [line, intervals] : carriers) emit(line, intervals, segments);
  // Pieces are already maximal; reduce only fixes ordering.
  return Shape::reduce(segments);
}

// [a.lo, a.hi] minus the closed intervals in `cut` (merged). Pieces of zero
// length are dropped.
void subtract(const Interval& a, const std::vector<Interval>& cut,
              std::vector<Interval>& out) {
  Rational cursor = a.lo;
  for (const Interval& c : cut) {
    if (c.hi <= cursor) continue;
    if (c.lo >= a.hi) break;
    if (cursor < c.lo) out.push_back({cursor, c.lo});
    cursor = c.hi;
    if (cursor >= a.hi) return;
  }
  if (cursor < a.hi) out.push_back({cursor, a.hi});
}

}  // namespace

Shape Shape::reduce(std::span<const Segment> raw) {
  CarrierMap carriers = group_by_carrier(raw);
  Shape out;
  for (auto& [line, intervals] : carriers) {
    emit(line, merge(std::move(intervals)), out.segments_);
  }
  std::sort(out.segments_.begin(), out.segments_.end());
  return out;
}

std::vector<LineEq> Shape::carriers() const {
  std::vector<LineEq> lines;
  lines.reserve(segments_.size());
  for (const Segment& s : segments_) lines.push_back(s.carrier());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

bool Shape::covers(const Point2& p) const {
  for (const Segment& s : segments_) {
    LineEq line = s.carrier();
    if (!point_on_line(p, line)) continue;
    Rational t = line_parameter(line, p);
    if (line_parameter(line, s.p1()) <= t && t <= line_parameter(line, s.p2())) return true;
  }
  return false;
}

Shape sum(const Shape& s1, const Shape& s2) {
  std::vector<Segment> all = s1.segments();
  all.insert(all.end(), s2.segments().begin(), s2.segments().end());
  return Shape::reduce(all);
}

Shape difference(const Shape& s1, const Shape& s2) {
  CarrierMap lhs = group_by_carrier(s1.segments());
  CarrierMap rhs = group_by_carrier(s2.segments());
  CarrierMap result;
  for (auto& [line, intervals] : lhs) {
    auto it = rhs.find(line);
    if (it == rhs.end()) {
      result.emplace(line, std::move(intervals));
      continue;
    }
    std::vector<Interval> cut = merge(it->second);
    std::vector<Interval> kept;
    for (const Interval& iv : intervals) subtract(iv, cut, kept);
    if (!kept.empty()) result.emplace(line, std::move(kept));
  }
  return from_carriers(result);
}

Shape product(const Shape& s1, const Shape& s2) {
  CarrierMap lhs = group_by_carrier(s1.segments());
  CarrierMap rhs = group_by_carrier(s2.segments());
  CarrierMap result;
  for (const auto& [line, a_intervals] : lhs) {
    auto it = rhs.find(line);
    if (it == rhs.end()) continue;
    std::vector<Interval> common;
    for (const Interval& a : a_intervals) {
      for (const Interval& b : it->second) {
        const Rational& lo = std::max(a.lo, b.lo);
        const Rational& hi = std::min(a.hi, b.hi);
        if (lo < hi) common.push_back({lo, hi});
      }
    }
    if (!common.empty()) result.emplace(line, merge(std::move(common)));
  }
  return from_carriers(result);
}

AffineMap::AffineMap(Rational m11, Rational m12, Rational m21, Rational m22,
                     Rational tx, Rational ty)
    : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)),
      m22_(std::move(m22)), tx_(std::move(tx)), ty_(std::move(ty)) {
  if ((m11_ * m22_ - m12_ * m21_).is_zero()) {
    throw InvalidTransformError("affine map is not invertible");
  }
  bool rotation_like = m11_ == m22_ && m12_ == -m21_;
  bool reflection_like = m11_ == -m22_ && m12_ == m21_;
  if (!rotation_like && !reflection_like) {
    throw InvalidTransformError("affine map is not a similarity");
  }
}

AffineMap AffineMap::identity() { return AffineMap(1, 0, 0, 1, 0, 0); }

AffineMap AffineMap::translation(Rational tx, Rational ty) {
  return AffineMap(1, 0, 0, 1, std::move(tx), std::move(ty));
}

AffineMap AffineMap::scaling(Rational factor) {
  return AffineMap(factor, 0, 0, factor, 0, 0);
}

AffineMap AffineMap::rotation(Rational cos, Rational sin) {
  if (cos * cos + sin * sin != Rational(1)) {
    throw InvalidTransformError("rotation requires cos^2 + sin^2 = 1");
  }
  return AffineMap(cos, -sin, sin, cos, 0, 0);
}

AffineMap AffineMap::reflect_x_axis() { return AffineMap(1, 0, 0, -1, 0, 0); }

AffineMap AffineMap::reflect_y_axis() { return AffineMap(-1, 0, 0, 1, 0, 0); }

AffineMap AffineMap::then_after(const AffineMap& o) const {
  return AffineMap(m11_ * o.m11_ + m12_ * o.m21_, m11_ * o.m12_ + m12_ * o.m22_,
                   m21_ * o.m11_ + m22_ * o.m21_, m21_ * o.m12_ + m22_ * o.m22_,
                   m11_ * o.tx_ + m12_ * o.ty_ + tx_, m21_ * o.tx_ + m22_ * o.ty_ + ty_);
}

Point2 AffineMap::apply(const Point2& p) const {
  return Point2{m11_ * p.x + m12_ * p.y + tx_, m21_ * p.x + m22_ * p.y + ty_};
}

Shape transform(const Shape& s, const AffineMap& t) {
  std::vector<Segment> mapped;
  mapped.reserve(s.size());
  for (const Segment& seg : s.segments()) {
    mapped.emplace_back(t.apply(seg.p1()), t.apply(seg.p2()));
  }
  return Shape::reduce(mapped);
}

}  // namespace shapegeo
