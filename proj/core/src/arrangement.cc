#include "shapegeo/arrangement.h"

#include <algorithm>
#include <iterator>
#include <vector>

namespace shapegeo {
namespace {

template <typename T>
std::set<T> set_union_of(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

template <typename T>
std::set<T> set_difference_of(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

template <typename T>
std::set<T> set_intersection_of(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

}  // namespace

LinePair make_line_pair(LineEq l1, LineEq l2) {
  if (l2 < l1) std::swap(l1, l2);
  return {std::move(l1), std::move(l2)};
}

AxiomReport validate(const RawPointLineSet& raw) {
  AxiomReport report;
  for (const Point2& p : raw.points) {
    int incident = 0;
    for (const LineEq& line : raw.lines) {
      if (point_on_line(p, line) && ++incident == 2) break;
    }
    if (incident < 2) report.violations_rule1.insert(p);
  }
  std::vector<LineEq> lines(raw.lines.begin(), raw.lines.end());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::optional<Point2> meet = intersect(lines[i], lines[j]);
      if (meet && !raw.points.contains(*meet)) {
        report.violations_rule2.insert(make_line_pair(lines[i], lines[j]));
      }
    }
  }
  report.valid = report.violations_rule1.empty() && report.violations_rule2.empty();
  return report;
}

std::optional<Arrangement> Arrangement::from_raw(const RawPointLineSet& raw) {
  if (!validate(raw).valid) return std::nullopt;
  return Arrangement(raw);
}

Arrangement arrangement_of(const Shape& s) {
  RawPointLineSet data;
  std::vector<LineEq> lines = s.carriers();
  data.lines.insert(lines.begin(), lines.end());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (std::optional<Point2> meet = intersect(lines[i], lines[j])) {
        data.points.insert(std::move(*meet));
      }
    }
  }
  return Arrangement(std::move(data));
}

Arrangement arr_union(const Shape& s1, const Shape& s2) {
  return arrangement_of(sum(s1, s2));
}

Arrangement arr_difference(const Shape& s1, const Shape& s2) {
  return arrangement_of(difference(s1, s2));
}

Arrangement arr_intersection(const Shape& s1, const Shape& s2) {
  return arrangement_of(product(s1, s2));
}

RawPointLineSet naive_union(const Arrangement& a1, const Arrangement& a2) {
  return {set_union_of(a1.points(), a2.points()), set_union_of(a1.lines(), a2.lines())};
}

RawPointLineSet naive_difference(const Arrangement& a1, const Arrangement& a2) {
  return {set_difference_of(a1.points(), a2.points()),
          set_difference_of(a1.lines(), a2.lines())};
}

RawPointLineSet naive_intersection(const Arrangement& a1, const Arrangement& a2) {
  return {set_intersection_of(a1.points(), a2.points()),
          set_intersection_of(a1.lines(), a2.lines())};
}

}  // namespace shapegeo
