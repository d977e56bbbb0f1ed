#pragma once

#include <map>
#include <string>
#include <vector>

#include "pam/bigint.hpp"
#include "pam/matching.hpp"

namespace pam {

/// Label -> multiplicity.
using LabelMultiset = std::map<int, int>;

/// Label -> number of nodes at one level of the tree.
using LabelHistogram = std::map<int, BigInt>;

/// Root (0), (k) -> (k+1)^1 (k)^2 (k-1)^3 ... (0)^(k+2).
struct SuccessionRule {
  int root = 0;

  LabelMultiset children(int k) const;
};

LabelMultiset expand_rule(int k);

/// Histogram of level n+1 from that of level n.
LabelHistogram next_level(const LabelHistogram& h, const SuccessionRule& rule = {});

/// Level totals for levels 1..depth, computed on label histograms only.
std::vector<BigInt> level_counts(int depth);

/// The six patterns the rule is stated for.
const std::vector<Pattern>& gentree_patterns();
bool is_gentree_pattern(const Pattern& p);

/// Number of active sites minus two.
int label_of(const Matching& m, const Pattern& p);

struct Child {
  Matching matching;
  int label = 0;
};

/// Children from every pair s <= t of active sites whose insertion avoids
/// p; insertions that contain p are counted in `rejected`.
struct ChildSet {
  std::vector<Child> children;
  int rejected = 0;
};

ChildSet children_of(const Matching& m, const Pattern& p);
LabelMultiset empirical_children(const Matching& m, const Pattern& p);

struct RuleViolation {
  Matching matching;
  int label = 0;
  LabelMultiset expected;
  LabelMultiset actual;
  int rejected = 0;
};

struct CoverageViolation {
  Matching matching;
  int occurrences = 0;  // times produced as a child; 0 when missed
  bool avoids = true;   // false for children that contain the pattern
};

struct LemmaReport {
  Pattern pattern;
  int n = 0;
  std::vector<long long> level_sizes;  // levels 1..n+1
  std::vector<RuleViolation> rule_violations;
  std::vector<CoverageViolation> coverage_violations;

  bool passed() const { return rule_violations.empty() && coverage_violations.empty(); }
};

/// For each level 1..n: (a) every avoider's child labels equal the rule
/// applied to its label; (b) the children of the level, taken together,
/// are exactly the avoiders one level up, each produced once. Throws
/// std::invalid_argument for a pattern outside gentree_patterns().
LemmaReport validate_lemma(const Pattern& p, int n);

}  // namespace pam
