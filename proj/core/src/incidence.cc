#include "shapegeo/incidence.h"

#include <algorithm>
#include <map>

namespace shapegeo {
namespace {

std::string spreadsheet_label(std::size_t index, char base) {
  std::string out;
  ++index;
  while (index > 0) {
    --index;
    out.push_back(static_cast<char>(base + index % 26));
    index /= 26;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

template <typename Point, typename Line>
IncidenceStructure build(const std::set<Point>& points, const std::set<Line>& lines) {
  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;
  for (std::size_t i = 0; i < points.size(); ++i) point_labels.push_back(point_label(i));
  for (std::size_t j = 0; j < lines.size(); ++j) line_labels.push_back(line_label(j));
  std::set<Flag> flags;
  std::size_t i = 0;
  for (const Point& p : points) {
    std::size_t j = 0;
    for (const Line& line : lines) {
      if (point_on_line(p, line)) flags.emplace(i, j);
      ++j;
    }
    ++i;
  }
  return IncidenceStructure(std::move(point_labels), std::move(line_labels), std::move(flags));
}

StructureCheck failure(StructureDefect defect, std::vector<std::size_t> points,
                       std::vector<std::size_t> lines) {
  return StructureCheck{false, defect, std::move(points), std::move(lines)};
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::vector<std::string> point_labels,
                                       std::vector<std::string> line_labels,
                                       std::set<Flag> flags)
    : points_(std::move(point_labels)), lines_(std::move(line_labels)), flags_(std::move(flags)) {
  std::set<std::string> seen;
  for (const auto* labels : {&points_, &lines_}) {
    for (const std::string& label : *labels) {
      if (label.empty()) throw InvalidStructureError("empty label");
      if (!seen.insert(label).second) {
        throw InvalidStructureError("label '" + label + "' used more than once");
      }
    }
  }
  for (const auto& [p, l] : flags_) {
    if (p >= points_.size() || l >= lines_.size()) {
      throw InvalidStructureError("flag refers to an unknown point or line");
    }
  }
}

IncidenceStructure IncidenceStructure::from_labeled_flags(
    std::vector<std::string> point_labels, std::vector<std::string> line_labels,
    const std::vector<std::pair<std::string, std::string>>& flags) {
  std::map<std::string, std::size_t> point_index;
  std::map<std::string, std::size_t> line_index;
  for (std::size_t i = 0; i < point_labels.size(); ++i) point_index[point_labels[i]] = i;
  for (std::size_t j = 0; j < line_labels.size(); ++j) line_index[line_labels[j]] = j;
  std::set<Flag> indexed;
  for (const auto& [p, l] : flags) {
    auto pi = point_index.find(p);
    auto li = line_index.find(l);
    if (pi == point_index.end() || li == line_index.end()) {
      throw InvalidStructureError("flag (" + p + ", " + l + ") refers to an unknown label");
    }
    indexed.emplace(pi->second, li->second);
  }
  return IncidenceStructure(std::move(point_labels), std::move(line_labels), std::move(indexed));
}

std::vector<std::size_t> IncidenceStructure::points_on(std::size_t line) const {
  std::vector<std::size_t> out;
  for (const auto& [p, l] : flags_) {
    if (l == line) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> IncidenceStructure::lines_through(std::size_t point) const {
  std::vector<std::size_t> out;
  for (auto it = flags_.lower_bound({point, 0}); it != flags_.end() && it->first == point; ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::string point_label(std::size_t index) { return spreadsheet_label(index, 'a'); }
std::string line_label(std::size_t index) { return spreadsheet_label(index, 'A'); }

IncidenceStructure incidence_of(const Arrangement& a) { return build(a.points(), a.lines()); }

IncidenceStructure incidence_of(const RawPointLineSet& raw) {
  return build(raw.points, raw.lines);
}

const char* to_string(StructureDefect d) {
  switch (d) {
    case StructureDefect::None: return "None";
    case StructureDefect::LineWithFewerThanTwoPoints: return "LineWithFewerThanTwoPoints";
    case StructureDefect::IndistinguishableLines: return "IndistinguishableLines";
    case StructureDefect::PointsShareTwoLines: return "PointsShareTwoLines";
    case StructureDefect::PointsNotConnected: return "PointsNotConnected";
    case StructureDefect::NoNonCollinearTriple: return "NoNonCollinearTriple";
  }
  return "?";
}

StructureCheck is_point_line_geometry(const IncidenceStructure& s) {
  std::vector<std::vector<std::size_t>> point_sets;
  for (std::size_t l = 0; l < s.line_count(); ++l) {
    point_sets.push_back(s.points_on(l));
    if (point_sets.back().size() < 2) {
      return failure(StructureDefect::LineWithFewerThanTwoPoints, point_sets.back(), {l});
    }
  }
  for (std::size_t l1 = 0; l1 < s.line_count(); ++l1) {
    for (std::size_t l2 = l1 + 1; l2 < s.line_count(); ++l2) {
      if (point_sets[l1] == point_sets[l2]) {
        return failure(StructureDefect::IndistinguishableLines, point_sets[l1], {l1, l2});
      }
    }
  }
  return {};
}

StructureCheck is_near_linear(const IncidenceStructure& s) {
  if (StructureCheck geometry = is_point_line_geometry(s); !geometry) return geometry;
  for (std::size_t p = 0; p < s.point_count(); ++p) {
    std::vector<std::size_t> through_p = s.lines_through(p);
    for (std::size_t q = p + 1; q < s.point_count(); ++q) {
      std::vector<std::size_t> shared;
      for (std::size_t l : through_p) {
        if (s.incident(q, l)) shared.push_back(l);
        if (shared.size() == 2) {
          return failure(StructureDefect::PointsShareTwoLines, {p, q}, shared);
        }
      }
    }
  }
  return {};
}

StructureCheck is_linear_space(const IncidenceStructure& s) {
  if (StructureCheck near = is_near_linear(s); !near) return near;
  for (std::size_t p = 0; p < s.point_count(); ++p) {
    std::vector<std::size_t> through_p = s.lines_through(p);
    for (std::size_t q = p + 1; q < s.point_count(); ++q) {
      bool connected = std::any_of(through_p.begin(), through_p.end(),
                                   [&](std::size_t l) { return s.incident(q, l); });
      if (!connected) return failure(StructureDefect::PointsNotConnected, {p, q}, {});
    }
  }
  // With every pair on exactly one line, a non-collinear triple exists iff
  // there are at least three points and no single line holds them all.
  std::vector<std::size_t> everything(s.point_count());
  for (std::size_t p = 0; p < everything.size(); ++p) everything[p] = p;
  if (s.point_count() < 3) {
    std::vector<std::size_t> holder;
    for (std::size_t l = 0; l < s.line_count() && holder.empty(); ++l) {
      if (s.points_on(l).size() == s.point_count()) holder.push_back(l);
    }
    return failure(StructureDefect::NoNonCollinearTriple, everything, holder);
  }
  for (std::size_t l = 0; l < s.line_count(); ++l) {
    if (s.points_on(l).size() == s.point_count()) {
      return failure(StructureDefect::NoNonCollinearTriple, everything, {l});
    }
  }
  return {};
}

const char* to_string(GeometryClass c) {
  switch (c) {
    case GeometryClass::NotAGeometry: return "NotAGeometry";
    case GeometryClass::NearLinearSpace: return "NearLinearSpace";
    case GeometryClass::LinearSpace: return "LinearSpace";
  }
  return "?";
}

GeometryClass classify(const IncidenceStructure& s) {
  if (is_linear_space(s)) return GeometryClass::LinearSpace;
  if (is_near_linear(s)) return GeometryClass::NearLinearSpace;
  return GeometryClass::NotAGeometry;
}

std::size_t LeviGraph::point_degree(std::size_t point) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const Flag& e) { return e.first == point; }));
}

std::size_t LeviGraph::line_degree(std::size_t line) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const Flag& e) { return e.second == line; }));
}

LeviGraph levi_graph(const IncidenceStructure& s) {
  return LeviGraph{s.point_labels(), s.line_labels(),
                   std::vector<Flag>(s.flags().begin(), s.flags().end())};
}

}  // namespace shapegeo
