#include "pam/matching.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "pam/errors.hpp"

namespace pam {
namespace {

std::vector<int> parse_labels(std::string_view text) {
  std::vector<int> labels;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      std::string_view tok = text.substr(start, end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1) {
        throw ParseError(labels.size() + 1, "expected a positive label, got '" + std::string(tok) + "'");
      }
      labels.push_back(value);
      if (end == text.size()) break;
      start = end + 1;
    }
    return labels;
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '1' || c > '9') {
      throw ParseError(i + 1, std::string("expected a digit 1-9, got '") + c + "'");
    }
    labels.push_back(c - '0');
  }
  return labels;
}

// Backtracking matcher. bind[a] is the word letter bound to pattern letter
// a (0 when unbound); used[w] marks word letters already taken.
class Matcher {
 public:
  Matcher(std::span<const int> word, const Pattern& p) : word_(word), pat_(p.word()) {
    int maxp = 0;
    for (int a : pat_) maxp = std::max(maxp, a);
    int maxw = 0;
    for (int w : word_) maxw = std::max(maxw, w);
    bind_.assign(static_cast<std::size_t>(maxp) + 1, 0);
    used_.assign(static_cast<std::size_t>(maxw) + 1, 0);
  }

  bool run() { return step(0, 0); }

 private:
  bool step(std::size_t pi, std::size_t start) {
    if (pi == pat_.size()) return true;
    const std::size_t remaining = pat_.size() - pi;
    const int a = pat_[pi];
    for (std::size_t pos = start; pos + remaining <= word_.size(); ++pos) {
      const int w = word_[pos];
      if (bind_[a] != 0) {
        if (w != bind_[a]) continue;
        if (step(pi + 1, pos + 1)) return true;
        // A bound letter has exactly one later occurrence worth trying.
        return false;
      }
      if (used_[w] || !order_consistent(a, w)) continue;
      bind_[a] = w;
      used_[w] = 1;
      const bool found = step(pi + 1, pos + 1);
      bind_[a] = 0;
      used_[w] = 0;
      if (found) return true;
    }
    return false;
  }

  bool order_consistent(int a, int w) const {
    for (std::size_t b = 1; b < bind_.size(); ++b) {
      if (bind_[b] == 0) continue;
      if (static_cast<int>(b) < a && bind_[b] > w) return false;
      if (static_cast<int>(b) > a && bind_[b] < w) return false;
    }
    return true;
  }

  std::span<const int> word_;
  const std::vector<int>& pat_;
  std::vector<int> bind_;
  std::vector<char> used_;
};

void enumerate(std::vector<int>& partners, int nodes, const std::function<void(const Matching&)>& visit) {
  int u = 1;
  while (u <= nodes && partners[static_cast<std::size_t>(u)] != 0) ++u;
  if (u > nodes) {
    visit(Matching::from_partners(partners));
    return;
  }
  for (int v = u + 1; v <= nodes; ++v) {
    if (partners[static_cast<std::size_t>(v)] != 0) continue;
    partners[static_cast<std::size_t>(u)] = v;
    partners[static_cast<std::size_t>(v)] = u;
    enumerate(partners, nodes, visit);
    partners[static_cast<std::size_t>(u)] = 0;
    partners[static_cast<std::size_t>(v)] = 0;
  }
}

}  // namespace

Matching Matching::from_edges(std::vector<Edge> edges) {
  const int nodes = 2 * static_cast<int>(edges.size());
  std::vector<int> partners(static_cast<std::size_t>(nodes) + 1, 0);
  for (const Edge& e : edges) {
    if (e.opener < 1 || e.closer > nodes || e.opener >= e.closer) {
      throw std::invalid_argument("edge (" + std::to_string(e.opener) + "," + std::to_string(e.closer) +
                                  ") out of range for " + std::to_string(nodes) + " nodes");
    }
    for (int v : {e.opener, e.closer}) {
      if (partners[static_cast<std::size_t>(v)] != 0) {
        throw std::invalid_argument("node " + std::to_string(v) + " used twice");
      }
    }
    partners[static_cast<std::size_t>(e.opener)] = e.closer;
    partners[static_cast<std::size_t>(e.closer)] = e.opener;
  }
  return from_partners(std::move(partners));
}

Matching Matching::from_partners(std::vector<int> partners) {
  if (partners.empty() || (partners.size() - 1) % 2 != 0) {
    throw std::invalid_argument("partner table must cover an even number of nodes");
  }
  const int nodes = static_cast<int>(partners.size()) - 1;
  Matching m;
  m.edges_.reserve(static_cast<std::size_t>(nodes / 2));
  for (int v = 1; v <= nodes; ++v) {
    const int w = partners[static_cast<std::size_t>(v)];
    if (w < 1 || w > nodes || w == v || partners[static_cast<std::size_t>(w)] != v) {
      throw std::invalid_argument("inconsistent partner table at node " + std::to_string(v));
    }
    if (w > v) m.edges_.push_back({v, w});
  }
  partners[0] = 0;
  m.partners_ = std::move(partners);
  return m;
}

Matching Matching::from_word(std::span<const int> word) {
  if (word.size() % 2 != 0) {
    throw ParseError(word.size(), "odd word length " + std::to_string(word.size()));
  }
  const std::size_t n = word.size() / 2;
  std::vector<int> first(n + 1, 0);
  std::vector<int> partners(word.size() + 1, 0);
  int next_label = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int label = word[i];
    const int node = static_cast<int>(i) + 1;
    if (label < 1 || static_cast<std::size_t>(label) > n) {
      throw ParseError(i + 1, "label " + std::to_string(label) + " outside 1.." + std::to_string(n));
    }
    int& f = first[static_cast<std::size_t>(label)];
    if (f == 0) {
      if (label != next_label) {
        throw ParseError(i + 1, "label " + std::to_string(label) + " appears before label " +
                                    std::to_string(next_label) + " (non-canonical order)");
      }
      f = node;
      ++next_label;
    } else if (partners[static_cast<std::size_t>(f)] != 0) {
      throw ParseError(i + 1, "label " + std::to_string(label) + " appears more than twice");
    } else {
      partners[static_cast<std::size_t>(f)] = node;
      partners[static_cast<std::size_t>(node)] = f;
    }
  }
  for (std::size_t label = 1; label <= n; ++label) {
    const int f = first[label];
    if (f == 0 || partners[static_cast<std::size_t>(f)] == 0) {
      throw ParseError(static_cast<std::size_t>(f), "label " + std::to_string(label) + " appears only once");
    }
  }
  return from_partners(std::move(partners));
}

Edge Matching::edge_at(int node) const {
  const int other = partner(node);
  return node < other ? Edge{node, other} : Edge{other, node};
}

Matching parse_matching(std::string_view text) {
  const std::vector<int> labels = parse_labels(text);
  return Matching::from_word(labels);
}

std::vector<int> canonical_word(const Matching& m) {
  std::vector<int> word(static_cast<std::size_t>(m.node_count()));
  int label = 1;
  for (const Edge& e : m.edges()) {
    word[static_cast<std::size_t>(e.opener - 1)] = label;
    word[static_cast<std::size_t>(e.closer - 1)] = label;
    ++label;
  }
  return word;
}

std::string format_matching(const Matching& m) {
  std::string out;
  const bool compact = m.size() <= 9;
  for (int label : canonical_word(m)) {
    if (compact) {
      out.push_back(static_cast<char>('0' + label));
    } else {
      if (!out.empty()) out.push_back(',');
      out += std::to_string(label);
    }
  }
  return out;
}

int crossing_count(const Matching& m) {
  // Edge (i, j) is crossed from the right by every edge opening strictly
  // inside it and closing after j.
  int count = 0;
  for (const Edge& e : m.edges()) {
    for (int v = e.opener + 1; v < e.closer; ++v) {
      if (m.partner(v) > e.closer) ++count;
    }
  }
  return count;
}

Pattern Pattern::from_word(std::vector<int> word) {
  if (word.empty()) throw ParseError(0, "empty pattern");
  std::vector<int> seen;
  int next_label = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int a = word[i];
    if (a < 1) throw ParseError(i + 1, "pattern letters must be positive");
    if (static_cast<std::size_t>(a) >= seen.size()) seen.resize(static_cast<std::size_t>(a) + 1, 0);
    int& count = seen[static_cast<std::size_t>(a)];
    if (count == 0 && a != next_label) {
      throw ParseError(i + 1, "pattern letter " + std::to_string(a) + " appears before " +
                                  std::to_string(next_label) + " (not normalized)");
    }
    if (count == 0) ++next_label;
    if (++count > 2) throw ParseError(i + 1, "pattern letter " + std::to_string(a) + " used more than twice");
  }
  Pattern p;
  p.word_ = std::move(word);
  return p;
}

Pattern Pattern::parse(std::string_view text) { return from_word(parse_labels(text)); }

std::string Pattern::to_string() const {
  int maxp = 0;
  for (int a : word_) maxp = std::max(maxp, a);
  std::string out;
  for (int a : word_) {
    if (maxp <= 9) {
      out.push_back(static_cast<char>('0' + a));
    } else {
      if (!out.empty()) out.push_back(',');
      out += std::to_string(a);
    }
  }
  return out;
}

bool contains_pattern(std::span<const int> word, const Pattern& p) {
  if (p.length() > word.size()) return false;
  return Matcher(word, p).run();
}

bool contains_pattern(const Matching& m, const Pattern& p) {
  const std::vector<int> word = canonical_word(m);
  return contains_pattern(word, p);
}

bool avoids_all(const Matching& m, std::span<const Pattern> patterns) {
  const std::vector<int> word = canonical_word(m);
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains_pattern(word, p); });
}

void for_each_matching(int n, const std::function<void(const Matching&)>& visit) {
  if (n < 0) throw std::invalid_argument("edge count must be non-negative");
  std::vector<int> partners(static_cast<std::size_t>(2 * n) + 1, 0);
  enumerate(partners, 2 * n, visit);
}

std::vector<Matching> all_matchings(int n) {
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::vector<Matching> avoiders(int n, std::span<const Pattern> patterns) {
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& m) {
    if (avoids_all(m, patterns)) out.push_back(m);
  });
  return out;
}

Matching insert_edge(const Matching& m, int s, int t) {
  const int nodes = m.node_count();
  if (s < 1 || s > t || t > nodes) {
    throw std::out_of_range("insertion positions (" + std::to_string(s) + "," + std::to_string(t) +
                            ") must satisfy 1 <= s <= t <= " + std::to_string(nodes));
  }
  std::vector<int> partners(static_cast<std::size_t>(nodes) + 3, 0);
  // Old node v shifts by the number of new nodes inserted before it.
  auto shifted = [&](int v) { return v + (v > s ? 1 : 0) + (v > t ? 1 : 0); };
  for (const Edge& e : m.edges()) {
    const int a = shifted(e.opener);
    const int b = shifted(e.closer);
    partners[static_cast<std::size_t>(a)] = b;
    partners[static_cast<std::size_t>(b)] = a;
  }
  const int opener = s + 1;
  const int closer = t + 2;
  partners[static_cast<std::size_t>(opener)] = closer;
  partners[static_cast<std::size_t>(closer)] = opener;
  return Matching::from_partners(std::move(partners));
}

int last_opener(const Matching& m) { return m.empty() ? 0 : m.edges().back().opener; }

std::vector<int> active_sites(const Matching& m, const Pattern& p) {
  std::vector<int> sites;
  const int nodes = m.node_count();
  for (int s = std::max(1, last_opener(m)); s <= nodes; ++s) {
    for (int t = s; t <= nodes; ++t) {
      if (!contains_pattern(insert_edge(m, s, t), p)) {
        sites.push_back(s);
        break;
      }
    }
  }
  return sites;
}

Edge last_edge(const Matching& m) {
  if (m.empty()) throw std::invalid_argument("the empty matching has no last edge");
  return m.edge_at(m.node_count());
}

std::optional<Edge> critical_edge(const Matching& m) {
  const Edge last = last_edge(m);
  std::optional<Edge> best;
  for (int v = last.opener + 1; v < last.closer; ++v) {
    const int u = m.partner(v);
    if (u < last.opener && (!best || v > best->closer)) best = Edge{u, v};
  }
  return best;
}

}  // namespace pam
