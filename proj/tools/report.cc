#include "report.h"

#include <limits>
#include <string>

namespace shapegeo::report {
namespace {

Json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json labels_json(const IncidenceStructure& s, const std::vector<std::size_t>& points,
                 const std::vector<std::size_t>& lines) {
  Json out = Json::object();
  out["points"] = Json::array();
  out["lines"] = Json::array();
  for (std::size_t p : points) out["points"].push_back(s.point_labels()[p]);
  for (std::size_t l : lines) out["lines"].push_back(s.line_labels()[l]);
  return out;
}

Json check_json(const IncidenceStructure& s, const StructureCheck& c) {
  Json out = {{"holds", c.holds}, {"defect", to_string(c.defect)}};
  if (!c.holds) out["witness"] = labels_json(s, c.points, c.lines);
  return out;
}

Rational number_from_json(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw RawSetError(e.what());
    }
  }
  throw RawSetError("expected an integer or an \"n/d\" string, got " + v.dump());
}

}  // namespace

Json rational_json(const Rational& r) { return r.to_string(); }

Json point_json(const Point2& p) { return Json::array({rational_json(p.x), rational_json(p.y)}); }

Json line_json(const LineEq& line) {
  return Json::array({big_json(line.a()), big_json(line.b()), big_json(line.c())});
}

Json shape_json(const Shape& s) {
  Json segments = Json::array();
  for (const Segment& seg : s.segments()) {
    segments.push_back(Json::array({rational_json(seg.p1().x), rational_json(seg.p1().y),
                                    rational_json(seg.p2().x), rational_json(seg.p2().y)}));
  }
  return {{"segment_count", s.size()}, {"segments", segments}};
}

Json raw_set_json(const RawPointLineSet& raw) {
  Json points = Json::array();
  Json lines = Json::array();
  for (const Point2& p : raw.points) points.push_back(point_json(p));
  for (const LineEq& l : raw.lines) lines.push_back(line_json(l));
  return {{"point_count", raw.points.size()},
          {"line_count", raw.lines.size()},
          {"points", points},
          {"lines", lines}};
}

Json arrangement_json(const Arrangement& a) { return raw_set_json(a.as_raw()); }

Json axiom_report_json(const AxiomReport& r) {
  Json rule1 = Json::array();
  Json rule2 = Json::array();
  for (const Point2& p : r.violations_rule1) rule1.push_back(point_json(p));
  for (const auto& [l1, l2] : r.violations_rule2) {
    rule2.push_back(Json::array({line_json(l1), line_json(l2)}));
  }
  return {{"valid", r.valid}, {"violations_rule1", rule1}, {"violations_rule2", rule2}};
}

Json incidence_json(const IncidenceStructure& s, const RawPointLineSet& source) {
  Json points = Json::object();
  Json lines = Json::object();
  std::size_t i = 0;
  for (const Point2& p : source.points) points[s.point_labels()[i++]] = point_json(p);
  i = 0;
  for (const LineEq& l : source.lines) lines[s.line_labels()[i++]] = line_json(l);
  Json flags = Json::array();
  for (const auto& [p, l] : s.flags()) {
    flags.push_back(Json::array({s.point_labels()[p], s.line_labels()[l]}));
  }
  return {{"point_labels", s.point_labels()},
          {"line_labels", s.line_labels()},
          {"points", points},
          {"lines", lines},
          {"flags", flags}};
}

Json geometry_checks_json(const IncidenceStructure& s) {
  return {{"point_line_geometry", check_json(s, is_point_line_geometry(s))},
          {"near_linear", check_json(s, is_near_linear(s))},
          {"linear_space", check_json(s, is_linear_space(s))}};
}

Json determinacy_json(const DeterminacyVerdict& v) {
  return {{"determinate", v.determinate},
          {"reason", to_string(v.reason)},
          {"mark_count", v.mark_count}};
}

RawPointLineSet parse_raw_set(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw RawSetError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw RawSetError("expected a JSON object with points and lines");
  for (const auto& [key, value] : doc.items()) {
    if (key != "points" && key != "lines") throw RawSetError("unknown key '" + key + "'");
    if (!value.is_array()) throw RawSetError("'" + key + "' must be an array");
  }
  RawPointLineSet raw;
  if (doc.contains("points")) {
    for (const Json& p : doc["points"]) {
      if (!p.is_array() || p.size() != 2) throw RawSetError("point must be [x, y]: " + p.dump());
      raw.points.insert(Point2{number_from_json(p[0]), number_from_json(p[1])});
    }
  }
  if (doc.contains("lines")) {
    for (const Json& l : doc["lines"]) {
      if (!l.is_array() || l.size() != 3) throw RawSetError("line must be [a, b, c]: " + l.dump());
      try {
        raw.lines.insert(
            canonical_line(number_from_json(l[0]), number_from_json(l[1]), number_from_json(l[2])));
      } catch (const InvalidLineError& e) {
        throw RawSetError(e.what());
      }
    }
  }
  return raw;
}

}  // namespace shapegeo::report
