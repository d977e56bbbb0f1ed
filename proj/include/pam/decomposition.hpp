#pragma once

#include <vector>

#include "pam/matching.hpp"

namespace pam {

// Both decompositions are organised around the last edge (j, 2n) and its
// quasi-critical edges: the edges closing at j+1, ..., j+m, where j+m is the
// closer of the critical edge (m = 0 when nothing crosses the last edge).

/// Pieces of a 12312-avoiding matching.
///
/// theta[s-1] is induced on nodes cut_points[s-1]+1 .. cut_points[s] plus
/// the quasi-critical closer j+m+1-s, alpha on cut_points[m]+1 .. j-1 and
/// beta on j+m+1 .. 2n-1. The component node counts sum to 2n-2.
struct Decomposition12312 {
  int m = 0;
  int j = 0;
  std::vector<int> cut_points;  // v_0 = 0, v_1, ..., v_m
  std::vector<Matching> thetas;
  Matching alpha;
  Matching beta;
};

/// Pieces of a matching avoiding both 12312 and 121323: theta[s-1] is
/// induced strictly between consecutive quasi-critical openers (with j as
/// the final bound), beta on j+m+1 .. 2n-1.
struct DecompositionDouble {
  int m = 0;
  std::vector<Matching> thetas;  // m + 1 entries
  Matching beta;
};

/// E_{j+1}, ..., E_{j+m}, innermost first.
std::vector<Edge> quasi_critical_edges(const Matching& m);

/// Throws DomainError when the input contains 12312 and
/// std::invalid_argument when it is empty.
Decomposition12312 decompose_12312(const Matching& m);

/// Throws std::invalid_argument when the recorded m, j or cut points do not
/// agree with the component sizes, or when some theta is empty.
Matching recompose(const Decomposition12312& d);

DecompositionDouble decompose_double(const Matching& m);
Matching recompose(const DecompositionDouble& d);

/// With critical edge (x, y) and last edge (j, 2n): every node strictly
/// between j and y is a closer whose opener lies strictly between x and j,
/// and those edges are pairwise noncrossing. Vacuously true without a
/// critical edge.
bool critical_span_property_holds(const Matching& m);

/// The last edge crosses every quasi-critical edge, and no other edge
/// crosses two of them.
bool quasi_critical_crossing_property_holds(const Matching& m);

}  // namespace pam
