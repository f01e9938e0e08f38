#include "shapegeo/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace shapegeo {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

struct Record {
  Segment segment;
  std::size_t line;
};

// Reports every output segment that absorbed more than one input record.
std::vector<std::string> reduction_diagnostics(const std::vector<Record>& records,
                                               const Shape& shape) {
  std::vector<std::string> out;
  for (const Segment& merged : shape.segments()) {
    LineEq carrier = merged.carrier();
    Rational lo = line_parameter(carrier, merged.p1());
    Rational hi = line_parameter(carrier, merged.p2());
    std::vector<std::size_t> sources;
    for (const Record& r : records) {
      if (r.segment.carrier() != carrier) continue;
      if (lo <= line_parameter(carrier, r.segment.p1()) &&
          line_parameter(carrier, r.segment.p2()) <= hi) {
        sources.push_back(r.line);
      }
    }
    if (sources.size() < 2) continue;
    std::string msg = "reduced records on lines";
    for (std::size_t i = 0; i < sources.size(); ++i) {
      msg += (i == 0 ? " " : ", ") + std::to_string(sources[i]);
    }
    msg += " into maximal segment " + to_string(merged);
    out.push_back(std::move(msg));
  }
  return out;
}

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 8);
  return std::string(buf, end);
}

struct Box {
  Rational x0, y0, x1, y1;
};

// Part of `line` inside `box`, or nullopt when it misses the box.
std::optional<std::pair<Point2, Point2>> clip(const LineEq& line, const Box& box) {
  std::vector<Point2> hits;
  if (!line.is_vertical()) {
    for (const Rational& x : {box.x0, box.x1}) {
      Point2 p = point_at_parameter(line, x);
      if (box.y0 <= p.y && p.y <= box.y1) hits.push_back(std::move(p));
    }
  }
  if (line.a() != 0) {
    for (const Rational& y : {box.y0, box.y1}) {
      Rational x = (Rational(line.b()) * y + Rational(line.c())) / Rational(BigInt(-line.a()));
      if (box.x0 <= x && x <= box.x1) hits.push_back(Point2{x, y});
    }
  }
  if (hits.empty()) return std::nullopt;
  auto by_param = [&](const Point2& u, const Point2& v) {
    return line_parameter(line, u) < line_parameter(line, v);
  };
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), by_param);
  if (*lo == *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

}  // namespace

ShapeParseError::ShapeParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line) {}

ParsedShape parse_shape(std::istream& in) {
  std::vector<Record> records;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view line(text);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> words = split_words(line);
    if (words.empty()) continue;
    if (words[0] != "seg") {
      throw ShapeParseError(ShapeParseError::Kind::Malformed, line_no,
                            "unknown record '" + std::string(words[0]) + "'");
    }
    if (words.size() != 5) {
      throw ShapeParseError(ShapeParseError::Kind::Malformed, line_no,
                            "expected 'seg x1 y1 x2 y2'");
    }
    Rational coords[4];
    for (int i = 0; i < 4; ++i) {
      try {
        coords[i] = Rational::parse(words[i + 1]);
      } catch (const std::invalid_argument& e) {
        throw ShapeParseError(ShapeParseError::Kind::Malformed, line_no, e.what());
      }
    }
    try {
      records.push_back({Segment({coords[0], coords[1]}, {coords[2], coords[3]}), line_no});
    } catch (const DegenerateSegmentError& e) {
      throw ShapeParseError(ShapeParseError::Kind::DegenerateSegment, line_no, e.what());
    }
  }
  std::vector<Segment> raw;
  raw.reserve(records.size());
  for (const Record& r : records) raw.push_back(r.segment);
  ParsedShape parsed{Shape::reduce(raw), {}};
  parsed.diagnostics = reduction_diagnostics(records, parsed.shape);
  return parsed;
}

ParsedShape parse_shape(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_shape(in);
}

ParsedShape load_shape_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ShapeParseError(ShapeParseError::Kind::Unreadable, 0,
                          "cannot read shape file '" + path.string() + "'");
  }
  return parse_shape(in);
}

std::string serialize_shape(const Shape& s) {
  std::string out;
  for (const Segment& seg : s.segments()) {
    out += "seg " + seg.p1().x.to_string() + " " + seg.p1().y.to_string() + " " +
           seg.p2().x.to_string() + " " + seg.p2().y.to_string() + "\n";
  }
  return out;
}

std::string render_svg(const Shape& s, const Arrangement& a, const SvgOptions& options) {
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (s.empty() && a.points().empty() && a.lines().empty()) {
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1 1\" "
           "width=\"0\" height=\"0\"/>\n";
    return svg.str();
  }

  std::vector<Point2> extent;
  for (const Segment& seg : s.segments()) {
    extent.push_back(seg.p1());
    extent.push_back(seg.p2());
  }
  extent.insert(extent.end(), a.points().begin(), a.points().end());
  // An arrangement without a shape has no extent of its own; anchor its lines.
  if (extent.empty()) {
    for (const LineEq& line : a.lines()) extent.push_back(point_at_parameter(line, 0));
  }
  Box box{extent[0].x, extent[0].y, extent[0].x, extent[0].y};
  for (const Point2& p : extent) {
    box.x0 = std::min(box.x0, p.x);
    box.x1 = std::max(box.x1, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.y1 = std::max(box.y1, p.y);
  }
  Rational span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  Rational pad = span.is_zero() ? Rational(1) : span * options.padding_fraction;
  box.x0 -= pad;
  box.y0 -= pad;
  box.x1 += pad;
  box.y1 += pad;

  double width = (box.x1 - box.x0).to_double();
  double height = (box.y1 - box.y0).to_double();
  double scale = options.canvas_size / std::max(width, height);
  double unit = std::max(width, height) / 200.0;

  // y grows downwards in SVG; flip so the drawing reads like the plane.
  auto px = [](const Rational& x) { return fmt(x.to_double()); };
  auto py = [](const Rational& y) { return fmt(-y.to_double()); };

  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << px(box.x0)
      << ' ' << py(box.y1) << ' ' << fmt(width) << ' ' << fmt(height) << "\" width=\""
      << fmt(width * scale) << "\" height=\"" << fmt(height * scale) << "\">\n";

  svg << "  <g id=\"construction-lines\" fill=\"none\" stroke=\"#808080\" stroke-width=\""
      << fmt(unit * 0.5) << "\" stroke-dasharray=\"" << fmt(unit * 3) << ' ' << fmt(unit * 2)
      << "\">\n";
  for (const LineEq& line : a.lines()) {
    auto ends = clip(line, box);
    if (!ends) continue;
    svg << "    <line class=\"construction\" x1=\"" << px(ends->first.x) << "\" y1=\""
        << py(ends->first.y) << "\" x2=\"" << px(ends->second.x) << "\" y2=\""
        << py(ends->second.y) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"segments\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << fmt(unit)
      << "\" stroke-linecap=\"round\">\n";
  for (const Segment& seg : s.segments()) {
    svg << "    <line class=\"segment\" x1=\"" << px(seg.p1().x) << "\" y1=\"" << py(seg.p1().y)
        << "\" x2=\"" << px(seg.p2().x) << "\" y2=\"" << py(seg.p2().y) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g id=\"registration-marks\" fill=\"#000000\" stroke=\"none\">\n";
  for (const Point2& p : a.points()) {
    svg << "    <circle class=\"mark\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\""
        << fmt(unit * 2) << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string emit_dot(const IncidenceStructure& s) {
  LeviGraph g = levi_graph(s);
  std::ostringstream dot;
  dot << "graph levi {\n";
  for (const std::string& p : g.point_vertices) {
    dot << "  p_" << p << " [shape=circle, label=\"" << p << "\"];\n";
  }
  for (const std::string& l : g.line_vertices) {
    dot << "  L_" << l << " [shape=box, label=\"" << l << "\"];\n";
  }
  for (const auto& [p, l] : g.edges) {
    dot << "  p_" << g.point_vertices[p] << " -- L_" << g.line_vertices[l] << ";\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace shapegeo
