#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shapegeo/arrangement.h"

namespace shapegeo {

class InvalidStructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (point index, line index)
using Flag = std::pair<std::size_t, std::size_t>;

// Abstract incidence structure (V, B, I): labeled points and lines and the
// set of flags between them. Carries no coordinates.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  // Throws InvalidStructureError on repeated labels, labels shared between
  // points and lines, or flags referring to unknown indices.
  IncidenceStructure(std::vector<std::string> point_labels,
                     std::vector<std::string> line_labels, std::set<Flag> flags);

  // Same, with flags given by label.
  static IncidenceStructure from_labeled_flags(
      std::vector<std::string> point_labels, std::vector<std::string> line_labels,
      const std::vector<std::pair<std::string, std::string>>& flags);

  const std::vector<std::string>& point_labels() const { return points_; }
  const std::vector<std::string>& line_labels() const { return lines_; }
  const std::set<Flag>& flags() const { return flags_; }

  std::size_t point_count() const { return points_.size(); }
  std::size_t line_count() const { return lines_.size(); }

  bool incident(std::size_t point, std::size_t line) const {
    return flags_.contains({point, line});
  }
  std::vector<std::size_t> points_on(std::size_t line) const;
  std::vector<std::size_t> lines_through(std::size_t point) const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<std::string> lines_;
  std::set<Flag> flags_;
};

// Spreadsheet-style labels: 0 -> "a", 25 -> "z", 26 -> "aa", ...
std::string point_label(std::size_t index);
// 0 -> "A", 25 -> "Z", 26 -> "AA", ...
std::string line_label(std::size_t index);

// Points labeled in lexicographic coordinate order, lines in canonical
// equation order; flag (p, L) iff p lies on L.
IncidenceStructure incidence_of(const Arrangement& a);
IncidenceStructure incidence_of(const RawPointLineSet& raw);

enum class StructureDefect {
  None,
  LineWithFewerThanTwoPoints,  // rule (i); lines = {offender}
  IndistinguishableLines,      // rule (ii); lines = {l1, l2}
  PointsShareTwoLines,         // points = {p, q}, lines = {l1, l2}
  PointsNotConnected,          // points = {p, q}
  NoNonCollinearTriple,        // lines = {line holding every point}, if any
};

const char* to_string(StructureDefect d);

// Outcome of a structural check. When `holds` is false, `defect` names the
// failed rule and the index lists carry the witness.
struct StructureCheck {
  bool holds = true;
  StructureDefect defect = StructureDefect::None;
  std::vector<std::size_t> points;
  std::vector<std::size_t> lines;

  explicit operator bool() const { return holds; }
};

// (i) every line has at least two points; (ii) distinct lines have distinct
// point sets.
StructureCheck is_point_line_geometry(const IncidenceStructure& s);

// Point-line geometry in which two distinct points share at most one line.
StructureCheck is_near_linear(const IncidenceStructure& s);

// Near-linear, every two points share exactly one line, and there are three
// points not on a common line.
StructureCheck is_linear_space(const IncidenceStructure& s);

enum class GeometryClass { NotAGeometry, NearLinearSpace, LinearSpace };

const char* to_string(GeometryClass c);

GeometryClass classify(const IncidenceStructure& s);

// Bipartite point/line graph with one edge per flag. Vertices follow the
// structure's label order.
struct LeviGraph {
  std::vector<std::string> point_vertices;
  std::vector<std::string> line_vertices;
  std::vector<Flag> edges;

  std::size_t point_degree(std::size_t point) const;
  std::size_t line_degree(std::size_t line) const;
};

LeviGraph levi_graph(const IncidenceStructure& s);

}  // namespace shapegeo
