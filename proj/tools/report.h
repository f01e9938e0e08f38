#pragma once

#include <istream>

#include <json.hpp>

#include "shapegeo/arrangement.h"
#include "shapegeo/determinacy.h"
#include "shapegeo/incidence.h"
#include "shapegeo/shape.h"

namespace shapegeo::report {

using Json = nlohmann::json;

// Keys are emitted sorted (nlohmann::json uses std::map), arrays follow the
// canonical order of the underlying sets.

Json rational_json(const Rational& r);
Json point_json(const Point2& p);
Json line_json(const LineEq& line);

Json shape_json(const Shape& s);
Json raw_set_json(const RawPointLineSet& raw);
Json arrangement_json(const Arrangement& a);
Json axiom_report_json(const AxiomReport& r);
Json incidence_json(const IncidenceStructure& s, const RawPointLineSet& source);
Json geometry_checks_json(const IncidenceStructure& s);
Json determinacy_json(const DeterminacyVerdict& v);

class RawSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Reads {"points": [[x, y], ...], "lines": [[a, b, c], ...]}. Each number is
// a JSON integer or an "n/d" string. Throws RawSetError on malformed input.
RawPointLineSet parse_raw_set(std::istream& in);

}  // namespace shapegeo::report
