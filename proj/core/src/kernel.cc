#include "shapegeo/kernel.h"

#include <algorithm>

namespace shapegeo {

std::string to_string(const Point2& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

std::strong_ordering operator<=>(const LineEq& lhs, const LineEq& rhs) {
  if (auto c = compare_big(lhs.a_, rhs.a_); c != 0) return c;
  if (auto c = compare_big(lhs.b_, rhs.b_); c != 0) return c;
  return compare_big(lhs.c_, rhs.c_);
}

std::string to_string(const LineEq& line) {
  return "[" + line.a().get_str() + ", " + line.b().get_str() + ", " +
         line.c().get_str() + "]";
}

LineEq canonical_line(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero()) {
    throw InvalidLineError("line equation with a = b = 0");
  }
  // Clear denominators, then divide out the content.
  BigInt den;
  mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  BigInt ia = a.numerator() * (den / a.denominator());
  BigInt ib = b.numerator() * (den / b.denominator());
  BigInt ic = c.numerator() * (den / c.denominator());

  BigInt g = gcd(ia, ib);
  g = gcd(g, ic);
  ia /= g;
  ib /= g;
  ic /= g;
  if (ia < 0 || (ia == 0 && ib < 0)) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  return LineEq(std::move(ia), std::move(ib), std::move(ic));
}

LineEq line_through(const Point2& p, const Point2& q) {
  if (p == q) throw DegenerateSegmentError("line through coincident points " + to_string(p));
  // (y2 - y1) x - (x2 - x1) y + (x2 - x1) y1 - (y2 - y1) x1 = 0
  Rational dx = q.x - p.x;
  Rational dy = q.y - p.y;
  return canonical_line(dy, -dx, dx * p.y - dy * p.x);
}

bool point_on_line(const Point2& p, const LineEq& line) {
  mpq_class v = line.a() * p.x.raw() + line.b() * p.y.raw() + line.c();
  return sgn(v) == 0;
}

bool are_parallel(const LineEq& l1, const LineEq& l2) {
  return l1.a() * l2.b() - l2.a() * l1.b() == 0;
}

std::optional<Point2> intersect(const LineEq& l1, const LineEq& l2) {
  if (l1 == l2) throw IdenticalLinesError("intersect called on identical lines " + to_string(l1));
  BigInt det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) return std::nullopt;
  BigInt xn = l1.b() * l2.c() - l2.b() * l1.c();
  BigInt yn = l2.a() * l1.c() - l1.a() * l2.c();
  return Point2{Rational(xn, det), Rational(yn, det)};
}

Rational line_parameter(const LineEq& line, const Point2& p) {
  return line.is_vertical() ? p.y : p.x;
}

Point2 point_at_parameter(const LineEq& line, const Rational& t) {
  if (line.is_vertical()) {
    return Point2{Rational(BigInt(-line.c()), line.a()), t};
  }
  // y = -(a t + c) / b
  Rational y = (Rational(line.a()) * t + Rational(line.c())) / Rational(BigInt(-line.b()));
  return Point2{t, y};
}

Segment::Segment(Point2 p, Point2 q) {
  if (p == q) throw DegenerateSegmentError("zero-length segment at " + to_string(p));
  if (q < p) std::swap(p, q);
  p1_ = std::move(p);
  p2_ = std::move(q);
}

std::string to_string(const Segment& s) {
  return "(" + to_string(s.p1()) + ", " + to_string(s.p2()) + ")";
}

const char* to_string(CoClass c) {
  switch (c) {
    case CoClass::DistinctCarriers: return "DistinctCarriers";
    case CoClass::CollinearDisjoint: return "CollinearDisjoint";
    case CoClass::AdjacentCollinear: return "AdjacentCollinear";
    case CoClass::OverlappingCollinear: return "OverlappingCollinear";
  }
  return "?";
}

CoClass co_classify(const Segment& s1, const Segment& s2) {
  LineEq carrier = s1.carrier();
  if (carrier != s2.carrier()) return CoClass::DistinctCarriers;
  // Lexicographic endpoint order makes p1 the low end of the parameter range.
  Rational lo = std::max(line_parameter(carrier, s1.p1()), line_parameter(carrier, s2.p1()));
  Rational hi = std::min(line_parameter(carrier, s1.p2()), line_parameter(carrier, s2.p2()));
  auto order = lo <=> hi;
  if (order < 0) return CoClass::OverlappingCollinear;
  if (order == 0) return CoClass::AdjacentCollinear;
  return CoClass::CollinearDisjoint;
}

}  // namespace shapegeo
