#include "pam/gentree.hpp"

#include <algorithm>
#include <stdexcept>

namespace pam {

LabelMultiset SuccessionRule::children(int k) const {
  if (k < 0) throw std::invalid_argument("labels are non-negative");
  LabelMultiset out;
  for (int t = 1; t <= k + 2; ++t) out[k + 2 - t] = t;
  return out;
}

LabelMultiset expand_rule(int k) { return SuccessionRule{}.children(k); }

LabelHistogram next_level(const LabelHistogram& h, const SuccessionRule& rule) {
  LabelHistogram out;
  for (const auto& [label, count] : h) {
    for (const auto& [child, mult] : rule.children(label)) out[child] += count * mult;
  }
  return out;
}

std::vector<BigInt> level_counts(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  const SuccessionRule rule;
  std::vector<BigInt> totals;
  LabelHistogram h{{rule.root, BigInt(1)}};
  for (int level = 1; level <= depth; ++level) {
    BigInt total = 0;
    for (const auto& [label, count] : h) total += count;
    totals.push_back(total);
    if (level < depth) h = next_level(h, rule);
  }
  return totals;
}

const std::vector<Pattern>& gentree_patterns() {
  static const std::vector<Pattern> patterns = [] {
    std::vector<Pattern> out;
    for (const char* w : {"12312", "12132", "12123", "12321", "12231", "12213"}) out.push_back(Pattern::parse(w));
    return out;
  }();
  return patterns;
}

bool is_gentree_pattern(const Pattern& p) {
  const auto& all = gentree_patterns();
  return std::find(all.begin(), all.end(), p) != all.end();
}

int label_of(const Matching& m, const Pattern& p) { return static_cast<int>(active_sites(m, p).size()) - 2; }

ChildSet children_of(const Matching& m, const Pattern& p) {
  const auto sites = active_sites(m, p);
  ChildSet out;
  for (std::size_t a = 0; a < sites.size(); ++a) {
    for (std::size_t b = a; b < sites.size(); ++b) {
      Matching child = insert_edge(m, sites[a], sites[b]);
      if (contains_pattern(child, p)) {
        ++out.rejected;
        continue;
      }
      const int label = label_of(child, p);
      out.children.push_back({std::move(child), label});
    }
  }
  return out;
}

LabelMultiset empirical_children(const Matching& m, const Pattern& p) {
  LabelMultiset out;
  for (const Child& c : children_of(m, p).children) ++out[c.label];
  return out;
}

LemmaReport validate_lemma(const Pattern& p, int n) {
  if (!is_gentree_pattern(p)) {
    throw std::invalid_argument("pattern " + p.to_string() + " is not one of the six generating-tree patterns");
  }
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  LemmaReport report;
  report.pattern = p;
  report.n = n;
  const std::vector<Pattern> single{p};
  std::vector<Matching> level = avoiders(1, single);
  report.level_sizes.push_back(static_cast<long long>(level.size()));
  for (int k = 1; k <= n; ++k) {
    std::map<Matching, int> produced;
    for (const Matching& m : level) {
      const int label = label_of(m, p);
      ChildSet kids = children_of(m, p);
      LabelMultiset actual;
      for (const Child& c : kids.children) {
        ++actual[c.label];
        ++produced[c.matching];
      }
      LabelMultiset expected = label >= 0 ? expand_rule(label) : LabelMultiset{};
      if (label < 0 || actual != expected || kids.rejected > 0) {
        report.rule_violations.push_back({m, label, std::move(expected), std::move(actual), kids.rejected});
      }
    }
    std::vector<Matching> next = avoiders(k + 1, single);
    for (const Matching& m : next) {
      auto it = produced.find(m);
      const int times = it == produced.end() ? 0 : it->second;
      if (times != 1) report.coverage_violations.push_back({m, times, true});
      if (it != produced.end()) produced.erase(it);
    }
    // Anything left over was produced but is not an avoider one level up.
    for (const auto& [m, times] : produced) report.coverage_violations.push_back({m, times, false});
    report.level_sizes.push_back(static_cast<long long>(next.size()));
    level = std::move(next);
  }
  return report;
}

}  // namespace pam
