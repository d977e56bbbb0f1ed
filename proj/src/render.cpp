#include "pam/render.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pam {

std::string render_arc_diagram(const Matching& m) {
  if (m.size() > kRenderMaxEdges) {
    throw std::length_error("cannot render " + std::to_string(m.size()) + " edges (limit " +
                            std::to_string(kRenderMaxEdges) + "); use the comma format instead: " +
                            format_matching(m));
  }
  if (m.empty()) return "(empty matching)\n";

  const int nodes = m.node_count();
  const int cell = static_cast<int>(std::to_string(nodes).size()) + 1;
  const int width = (nodes - 1) * cell + 1;
  auto column = [&](int node) { return static_cast<std::size_t>((node - 1) * cell); };

  std::vector<Edge> order = m.edges();
  std::stable_sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
    return a.closer - a.opener > b.closer - b.opener;
  });

  std::string out;
  std::vector<std::size_t> verticals;
  for (const Edge& e : order) {
    std::string row(static_cast<std::size_t>(width), ' ');
    for (std::size_t c = column(e.opener); c <= column(e.closer); ++c) row[c] = '-';
    for (std::size_t c : verticals) row[c] = '|';
    row[column(e.opener)] = '+';
    row[column(e.closer)] = '+';
    verticals.push_back(column(e.opener));
    verticals.push_back(column(e.closer));
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out.push_back('\n');
  }
  std::string labels(static_cast<std::size_t>(width) + static_cast<std::size_t>(cell), ' ');
  for (int v = 1; v <= nodes; ++v) {
    const std::string text = std::to_string(v);
    labels.replace(column(v), text.size(), text);
  }
  labels.erase(labels.find_last_not_of(' ') + 1);
  out += labels;
  out.push_back('\n');
  return out;
}

}  // namespace pam
