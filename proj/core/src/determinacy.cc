#include "shapegeo/determinacy.h"

#include <tuple>
#include <vector>

#include "shapegeo/arrangement.h"
#include "shapegeo/incidence.h"

namespace shapegeo {

const char* to_string(DeterminacyReason r) {
  switch (r) {
    case DeterminacyReason::GeometryArrangement: return "GeometryArrangement";
    case DeterminacyReason::TwoOrMoreMarks: return "TwoOrMoreMarks";
    case DeterminacyReason::FewerThanTwoMarks: return "FewerThanTwoMarks";
    case DeterminacyReason::EmptyArrangement: return "EmptyArrangement";
  }
  return "?";
}

DeterminacyVerdict classify_rule(const Shape& a) {
  Arrangement arrangement = arrangement_of(a);
  DeterminacyVerdict verdict;
  verdict.mark_count = arrangement.points().size();
  if (arrangement.empty()) {
    verdict.reason = DeterminacyReason::EmptyArrangement;
    return verdict;
  }
  // Arrangements never repeat a line, so only rule (i) can fail here.
  if (is_point_line_geometry(incidence_of(arrangement))) {
    verdict.determinate = true;
    verdict.reason = DeterminacyReason::GeometryArrangement;
  } else if (verdict.mark_count >= 2) {
    verdict.determinate = true;
    verdict.reason = DeterminacyReason::TwoOrMoreMarks;
  } else {
    verdict.reason = DeterminacyReason::FewerThanTwoMarks;
  }
  return verdict;
}

bool oracle_determinate_by_triples(const Shape& a) {
  std::vector<LineEq> carriers;
  for (const Segment& s : a.segments()) carriers.push_back(s.carrier());
  const std::size_t n = carriers.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const LineEq& l1 = carriers[i];
        const LineEq& l2 = carriers[j];
        const LineEq& l3 = carriers[k];
        // (ii) no two collinear
        if (l1 == l2 || l1 == l3 || l2 == l3) continue;
        // (iii) not all three parallel
        if (are_parallel(l1, l2) && are_parallel(l2, l3)) continue;
        // (i) no common point: the three lines are concurrent iff some meeting
        // point of two of them lies on the third
        bool concurrent = false;
        for (const auto& [u, v, w] : {std::tie(l1, l2, l3), std::tie(l1, l3, l2),
                                      std::tie(l2, l3, l1)}) {
          if (auto meet = intersect(u, v); meet && point_on_line(*meet, w)) {
            concurrent = true;
            break;
          }
        }
        if (!concurrent) return true;
      }
    }
  }
  return false;
}

}  // namespace shapegeo
