#pragma once

#include <cstddef>

#include "shapegeo/shape.h"

namespace shapegeo {

enum class DeterminacyReason {
  GeometryArrangement,  // the arrangement is a point-line geometry
  TwoOrMoreMarks,       // not a geometry, but at least two registration marks
  FewerThanTwoMarks,    // a pencil or a family of parallels
  EmptyArrangement,     // the empty shape
};

const char* to_string(DeterminacyReason r);

struct DeterminacyVerdict {
  bool determinate = false;
  DeterminacyReason reason = DeterminacyReason::EmptyArrangement;
  std::size_t mark_count = 0;

  friend bool operator==(const DeterminacyVerdict&, const DeterminacyVerdict&) = default;
};

// Decides whether a rule A -> B with left-hand side `a` is determinate, from
// the arrangement of `a` alone.
DeterminacyVerdict classify_rule(const Shape& a);

// Independent check by brute force over segment triples: true iff some three
// segments have pairwise distinct carriers that are neither all parallel nor
// concurrent.
bool oracle_determinate_by_triples(const Shape& a);

}  // namespace shapegeo
