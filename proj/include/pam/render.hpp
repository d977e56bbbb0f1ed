#pragma once

#include <string>

#include "pam/matching.hpp"

namespace pam {

inline constexpr int kRenderMaxEdges = 20;

/// Monospaced arc diagram: one row per edge, longest arcs on top, node
/// indices on the last line. Vertical bars carry each arc down to its
/// nodes. Throws std::length_error past kRenderMaxEdges edges.
std::string render_arc_diagram(const Matching& m);

}  // namespace pam
