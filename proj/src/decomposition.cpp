#include "pam/decomposition.hpp"

#include <stdexcept>
#include <string>

#include "pam/errors.hpp"

namespace pam {
namespace {

const Pattern& pattern_12312() {
  static const Pattern p = Pattern::parse("12312");
  return p;
}

const Pattern& pattern_121323() {
  static const Pattern p = Pattern::parse("121323");
  return p;
}

bool crosses(const Edge& a, const Edge& b) {
  return (a.opener < b.opener && b.opener < a.closer && a.closer < b.closer) ||
         (b.opener < a.opener && a.opener < b.closer && b.closer < a.closer);
}

std::vector<int> node_range(int first, int last) {
  std::vector<int> nodes;
  for (int v = first; v <= last; ++v) nodes.push_back(v);
  return nodes;
}

// The submatching on `nodes` (sorted), renumbered 1..k. The node set must be
// closed under partner; a violation means the structural lemma failed.
Matching induced(const Matching& m, const std::vector<int>& nodes) {
  std::vector<int> index(static_cast<std::size_t>(m.node_count()) + 1, 0);
  for (std::size_t k = 0; k < nodes.size(); ++k) index[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k) + 1;
  std::vector<int> partners(nodes.size() + 1, 0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const int other = index[static_cast<std::size_t>(m.partner(nodes[k]))];
    if (other == 0) {
      throw std::logic_error("component is not closed: node " + std::to_string(nodes[k]) + " pairs outside it");
    }
    partners[k + 1] = other;
  }
  return Matching::from_partners(std::move(partners));
}

// Copies component onto the host nodes targets[0..], targets[k] receiving
// component node k+1.
void place(std::vector<int>& partners, const Matching& component, const std::vector<int>& targets) {
  for (const Edge& e : component.edges()) {
    const int a = targets[static_cast<std::size_t>(e.opener - 1)];
    const int b = targets[static_cast<std::size_t>(e.closer - 1)];
    partners[static_cast<std::size_t>(a)] = b;
    partners[static_cast<std::size_t>(b)] = a;
  }
}

void link(std::vector<int>& partners, int a, int b) {
  partners[static_cast<std::size_t>(a)] = b;
  partners[static_cast<std::size_t>(b)] = a;
}

}  // namespace

std::vector<Edge> quasi_critical_edges(const Matching& m) {
  const Edge last = last_edge(m);
  const auto critical = critical_edge(m);
  std::vector<Edge> quasi;
  if (!critical) return quasi;
  for (int v = last.opener + 1; v <= critical->closer; ++v) {
    if (m.is_opener(v)) {
      throw std::logic_error("node " + std::to_string(v) + " between the last edge and its critical edge is an opener");
    }
    quasi.push_back(m.edge_at(v));
  }
  return quasi;
}

Decomposition12312 decompose_12312(const Matching& m) {
  if (m.empty()) throw std::invalid_argument("cannot decompose the empty matching");
  if (contains_pattern(m, pattern_12312())) {
    throw DomainError("matching " + format_matching(m) + " contains 12312");
  }
  const Edge last = last_edge(m);
  const std::vector<Edge> quasi = quasi_critical_edges(m);

  Decomposition12312 d;
  d.m = static_cast<int>(quasi.size());
  d.j = last.opener;
  d.cut_points.push_back(0);
  for (int r = 1; r <= d.m; ++r) {
    // E_{j+m+1-r}: the r-th quasi-critical edge counted from the outside.
    const Edge target = quasi[static_cast<std::size_t>(d.m - r)];
    int v = 0;
    for (const Edge& e : m.edges()) {
      if (e != last && crosses(e, target)) v = std::max(v, e.closer);
    }
    d.cut_points.push_back(v == 0 ? target.opener : v);
  }
  for (int s = 1; s <= d.m; ++s) {
    std::vector<int> nodes = node_range(d.cut_points[static_cast<std::size_t>(s - 1)] + 1,
                                        d.cut_points[static_cast<std::size_t>(s)]);
    nodes.push_back(d.j + d.m + 1 - s);
    d.thetas.push_back(induced(m, nodes));
  }
  d.alpha = induced(m, node_range(d.cut_points.back() + 1, d.j - 1));
  d.beta = induced(m, node_range(d.j + d.m + 1, m.node_count() - 1));
  return d;
}

Matching recompose(const Decomposition12312& d) {
  const int m = static_cast<int>(d.thetas.size());
  if (d.m != m) {
    throw std::invalid_argument("decomposition records m=" + std::to_string(d.m) + " but has " +
                                std::to_string(m) + " theta components");
  }
  std::vector<int> cuts{0};
  for (const Matching& theta : d.thetas) {
    if (theta.empty()) throw std::invalid_argument("theta components must be nonempty");
    cuts.push_back(cuts.back() + theta.node_count() - 1);
  }
  const int j = cuts.back() + d.alpha.node_count() + 1;
  if ((!d.cut_points.empty() && d.cut_points != cuts) || (d.j != 0 && d.j != j)) {
    throw std::invalid_argument("inconsistent component sizes in decomposition");
  }
  const int nodes = j + m + d.beta.node_count() + 1;

  std::vector<int> partners(static_cast<std::size_t>(nodes) + 1, 0);
  for (int s = 1; s <= m; ++s) {
    std::vector<int> targets = node_range(cuts[static_cast<std::size_t>(s - 1)] + 1, cuts[static_cast<std::size_t>(s)]);
    targets.push_back(j + m + 1 - s);
    place(partners, d.thetas[static_cast<std::size_t>(s - 1)], targets);
  }
  place(partners, d.alpha, node_range(cuts.back() + 1, j - 1));
  place(partners, d.beta, node_range(j + m + 1, nodes - 1));
  link(partners, j, nodes);
  return Matching::from_partners(std::move(partners));
}

DecompositionDouble decompose_double(const Matching& m) {
  if (m.empty()) throw std::invalid_argument("cannot decompose the empty matching");
  if (contains_pattern(m, pattern_12312()) || contains_pattern(m, pattern_121323())) {
    throw DomainError("matching " + format_matching(m) + " does not avoid both 12312 and 121323");
  }
  const Edge last = last_edge(m);
  const std::vector<Edge> quasi = quasi_critical_edges(m);
  const int mq = static_cast<int>(quasi.size());
  const int j = last.opener;

  // v_0 = 0, v_s = opener of E_{j+m+1-s}, v_{m+1} = j.
  std::vector<int> cuts{0};
  for (int s = 1; s <= mq; ++s) cuts.push_back(quasi[static_cast<std::size_t>(mq - s)].opener);
  cuts.push_back(j);

  DecompositionDouble d;
  d.m = mq;
  for (int s = 1; s <= mq + 1; ++s) {
    d.thetas.push_back(
        induced(m, node_range(cuts[static_cast<std::size_t>(s - 1)] + 1, cuts[static_cast<std::size_t>(s)] - 1)));
  }
  d.beta = induced(m, node_range(j + mq + 1, m.node_count() - 1));
  return d;
}

Matching recompose(const DecompositionDouble& d) {
  const int m = d.m;
  if (m < 0 || static_cast<int>(d.thetas.size()) != m + 1) {
    throw std::invalid_argument("double decomposition with m=" + std::to_string(m) + " needs m+1 theta components");
  }
  std::vector<int> cuts{0};
  for (const Matching& theta : d.thetas) cuts.push_back(cuts.back() + theta.node_count() + 1);
  const int j = cuts.back();
  const int nodes = j + m + d.beta.node_count() + 1;

  std::vector<int> partners(static_cast<std::size_t>(nodes) + 1, 0);
  for (int s = 1; s <= m + 1; ++s) {
    place(partners, d.thetas[static_cast<std::size_t>(s - 1)],
          node_range(cuts[static_cast<std::size_t>(s - 1)] + 1, cuts[static_cast<std::size_t>(s)] - 1));
  }
  // The quasi-critical edge closing at j+k opens at v_{m+1-k}.
  for (int k = 1; k <= m; ++k) link(partners, cuts[static_cast<std::size_t>(m + 1 - k)], j + k);
  place(partners, d.beta, node_range(j + m + 1, nodes - 1));
  link(partners, j, nodes);
  return Matching::from_partners(std::move(partners));
}

bool critical_span_property_holds(const Matching& m) {
  if (m.empty()) return true;
  const auto critical = critical_edge(m);
  if (!critical) return true;
  const Edge last = last_edge(m);
  std::vector<Edge> span;
  for (int v = last.opener + 1; v < critical->closer; ++v) {
    if (m.is_opener(v)) return false;
    const Edge e = m.edge_at(v);
    if (!(critical->opener < e.opener && e.opener < last.opener)) return false;
    span.push_back(e);
  }
  for (std::size_t a = 0; a < span.size(); ++a) {
    for (std::size_t b = a + 1; b < span.size(); ++b) {
      if (crosses(span[a], span[b])) return false;
    }
  }
  return true;
}

bool quasi_critical_crossing_property_holds(const Matching& m) {
  if (m.empty()) return true;
  if (!critical_span_property_holds(m)) return false;
  const Edge last = last_edge(m);
  const std::vector<Edge> quasi = quasi_critical_edges(m);
  for (const Edge& q : quasi) {
    if (!crosses(last, q)) return false;
  }
  for (const Edge& e : m.edges()) {
    if (e == last) continue;
    int hits = 0;
    for (const Edge& q : quasi) hits += crosses(e, q) ? 1 : 0;
    if (hits >= 2) return false;
  }
  return true;
}

}  // namespace pam
