#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pam {

/// An arc (opener, closer) with 1 <= opener < closer.
struct Edge {
  int opener = 0;
  int closer = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A perfect matching on the nodes 1..2n.
///
/// Edges are kept sorted by opener, so the edge at index k carries label k+1
/// in the canonical word. All nodes are 1-based, and "position s" means the
/// gap right after node s.
class Matching {
 public:
  Matching() = default;

  /// Throws std::invalid_argument unless the edges cover 1..2n exactly once.
  static Matching from_edges(std::vector<Edge> edges);

  /// `partners[v]` is the node matched with v for v in 1..2n; index 0 is
  /// ignored. Throws std::invalid_argument on an inconsistent table.
  static Matching from_partners(std::vector<int> partners);

  /// Builds from a canonical word (labels 1..n, each twice, first
  /// occurrences increasing). Throws ParseError naming the bad position.
  static Matching from_word(std::span<const int> word);

  int size() const noexcept { return static_cast<int>(edges_.size()); }
  int node_count() const noexcept { return 2 * size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int partner(int node) const { return partners_.at(static_cast<std::size_t>(node)); }
  bool is_opener(int node) const { return partner(node) > node; }

  /// The edge containing `node`.
  Edge edge_at(int node) const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges_ <=> b.edges_; }

 private:
  std::vector<Edge> edges_;
  std::vector<int> partners_{0};
};

/// Accepts a compact digit word ("123123") or comma-separated labels
/// ("1,2,1,3,2,3").
Matching parse_matching(std::string_view text);

std::vector<int> canonical_word(const Matching& m);

/// Digit word for n <= 9, comma form above that.
std::string format_matching(const Matching& m);

int crossing_count(const Matching& m);

/// A pattern word: letters 1..k, each used once or twice, first occurrences
/// in increasing order (12312, 121323, ...).
class Pattern {
 public:
  static Pattern from_word(std::vector<int> word);
  static Pattern parse(std::string_view text);

  const std::vector<int>& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> word_;
};

/// True iff some subsequence of `word` is order-isomorphic to the pattern.
bool contains_pattern(std::span<const int> word, const Pattern& p);
bool contains_pattern(const Matching& m, const Pattern& p);
bool avoids_all(const Matching& m, std::span<const Pattern> patterns);

/// Visits every matching on [2n] once: the smallest unmatched node is
/// paired with each larger unmatched node in increasing order, recursively.
void for_each_matching(int n, const std::function<void(const Matching&)>& visit);
std::vector<Matching> all_matchings(int n);

/// The matchings on [2n] avoiding every pattern in `patterns`, in
/// enumeration order.
std::vector<Matching> avoiders(int n, std::span<const Pattern> patterns);

/// Inserts a fresh opener after node s and its closer after node t
/// (1 <= s <= t <= 2n), then relabels to canonical form.
Matching insert_edge(const Matching& m, int s, int t);

/// The largest opener of m (0 for the empty matching).
int last_opener(const Matching& m);

/// Positions s >= last_opener(m) for which some t >= s makes
/// insert_edge(m, s, t) avoid p. Restricting s to the right of every
/// existing opener makes the inserted edge the one with the largest label,
/// so each matching has exactly one parent in the generating tree.
std::vector<int> active_sites(const Matching& m, const Pattern& p);

/// The edge (j, 2n) holding the last node.
Edge last_edge(const Matching& m);

/// The edge with the rightmost closer among those crossing last_edge(m);
/// empty when nothing crosses it. Throws std::invalid_argument on the empty
/// matching.
std::optional<Edge> critical_edge(const Matching& m);

}  // namespace pam
