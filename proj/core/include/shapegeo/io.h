#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shapegeo/arrangement.h"
#include "shapegeo/incidence.h"
#include "shapegeo/shape.h"

namespace shapegeo {

// Error while reading a shape file. line() is 1-based, 0 when the error is
// not tied to a line (e.g. unreadable file).
class ShapeParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, DegenerateSegment, Unreadable };

  ShapeParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

struct ParsedShape {
  Shape shape;
  // One entry per maximal segment that was assembled from several records.
  std::vector<std::string> diagnostics;
};

// Shape file format, one record per line:
//
//   seg x1 y1 x2 y2
//
// Coordinates are integers or n/d rationals. '#' starts a comment; blank
// lines are ignored. Records need not be maximal, the result is reduced.
ParsedShape parse_shape(std::istream& in);
ParsedShape parse_shape(std::string_view text);
ParsedShape load_shape_file(const std::filesystem::path& path);

// Canonical shape file text: one `seg` record per segment, in segment order.
std::string serialize_shape(const Shape& s);

struct SvgOptions {
  // Fraction of the content extent added on every side.
  Rational padding_fraction = Rational(1, 10);
  // Output width/height of the larger side in px.
  double canvas_size = 512.0;
};

// Segments drawn solid, construction lines dashed and clipped to the padded
// bounding box of segments and marks, registration marks as dots.
std::string render_svg(const Shape& s, const Arrangement& a, const SvgOptions& options = {});

// Graphviz rendering of the Levi graph: `p_<label>` circles for points,
// `L_<label>` boxes for lines, one edge per flag.
std::string emit_dot(const IncidenceStructure& s);

}  // namespace shapegeo
