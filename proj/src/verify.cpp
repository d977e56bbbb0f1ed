#include "pam/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pam/decomposition.hpp"
#include "pam/formulas.hpp"
#include "pam/gentree.hpp"
#include "pam/matching.hpp"
#include "pam/phi.hpp"
#include "pam/schroeder.hpp"
#include "pam/tableau.hpp"
#include "pam/walks.hpp"

namespace pam {
namespace {

// Collects the first failure; later checks are skipped once one fails.
class Checker {
 public:
  bool ok() const { return failure_.empty(); }

  bool expect(bool condition, const std::string& what) {
    if (ok() && !condition) failure_ = what;
    return condition;
  }

  CriterionResult finish(int id, std::string name, const std::string& summary) const {
    return {id, std::move(name), ok(), ok() ? summary : failure_};
  }

 private:
  std::string failure_;
};

int capped(int bound, std::optional<int> max_n) { return max_n ? std::min(bound, *max_n) : bound; }

const Pattern& p12312() {
  static const Pattern p = Pattern::parse("12312");
  return p;
}

const std::vector<Pattern>& double_patterns() {
  static const std::vector<Pattern> ps{Pattern::parse("12312"), Pattern::parse("121323")};
  return ps;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += parts[i];
  }
  return out;
}

// crossings -> count over the avoiders of `patterns` on [2n].
std::map<int, BigInt> crossing_histogram(int n, const std::vector<Pattern>& patterns) {
  std::map<int, BigInt> h;
  for_each_matching(n, [&](const Matching& m) {
    if (avoids_all(m, patterns)) h[crossing_count(m)] += 1;
  });
  return h;
}

std::string cell(int n, int m) { return "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"; }

CriterionResult three_catalan_counts(std::optional<int> max_n) {
  Checker c;
  const int top = capped(7, max_n);
  const std::vector<long> expected{1, 3, 12, 55, 273, 1428, 7752};
  std::vector<std::string> seen;
  for (int n = 1; n <= top && c.ok(); ++n) {
    long count = 0;
    for_each_matching(n, [&](const Matching& m) { count += contains_pattern(m, p12312()) ? 0 : 1; });
    seen.push_back(std::to_string(count));
    c.expect(BigInt(count) == catalan_k(n, 3),
             "n=" + std::to_string(n) + ": brute force " + std::to_string(count) + " != C(n,3) " +
                 to_decimal(catalan_k(n, 3)));
    c.expect(count == expected[static_cast<std::size_t>(n - 1)],
             "n=" + std::to_string(n) + ": count " + std::to_string(count) + " differs from the expected table");
  }
  return c.finish(1, "3-Catalan counts", "n=1.." + std::to_string(top) + ": " + join(seen));
}

CriterionResult crossing_refinement(std::optional<int> max_n) {
  Checker c;
  const int top = capped(6, max_n);
  const BivariateSeries G = solve_G(std::max(top, 1));
  c.expect(residual_G_cubic(G).is_zero(), "series solution leaves a nonzero cubic residual");
  int cells = 0;
  for (int n = 1; n <= top && c.ok(); ++n) {
    const auto h = crossing_histogram(n, {p12312()});
    const int top_m = std::max(n, G.y_degree(n)) + 1;
    for (int m = 0; m <= top_m && c.ok(); ++m) {
      const auto it = h.find(m);
      const BigInt brute = it == h.end() ? BigInt(0) : it->second;
      const BigInt closed = crossing_refined_12312(n, m);
      const BigInt series = G.integer_coefficient(n, m);
      const BigInt eq6 = closed_G_coeff(n, m);
      c.expect(brute == closed && closed == series && series == eq6,
               cell(n, m) + ": brute " + to_decimal(brute) + ", closed sum " + to_decimal(closed) + ", series " +
                   to_decimal(series) + ", closed coefficient " + to_decimal(eq6));
      ++cells;
    }
  }
  return c.finish(2, "crossing refinement", "n=1.." + std::to_string(top) + ", " + std::to_string(cells) +
                                                 " (n,m) cells agree four ways");
}

CriterionResult catalan_specialization(std::optional<int>) {
  Checker c;
  for (int n = 1; n <= 20 && c.ok(); ++n) {
    c.expect(crossing_refined_12312(n, 0) == catalan_k(n, 2),
             "n=" + std::to_string(n) + ": m=0 refinement " + to_decimal(crossing_refined_12312(n, 0)) +
                 " != Catalan " + to_decimal(catalan_k(n, 2)));
    c.expect(corollary_identity_check(n), "n=" + std::to_string(n) + ": Catalan identity fails");
  }
  return c.finish(3, "Catalan specialization", "n=1..20");
}

CriterionResult super_catalan(std::optional<int> max_n) {
  Checker c;
  const std::vector<long> expected{1, 1, 3, 11, 45};
  const int brute_top = capped(4, max_n);
  std::vector<std::string> seen;
  for (int n = 0; n <= brute_top && c.ok(); ++n) {
    const auto count = static_cast<long>(avoiders(n, double_patterns()).size());
    seen.push_back(std::to_string(count));
    c.expect(count == expected[static_cast<std::size_t>(n)],
             "n=" + std::to_string(n) + ": brute force " + std::to_string(count) + " differs from the expected table");
    c.expect(BigInt(count) == closed_f(n), "n=" + std::to_string(n) + ": brute force != binomial sum");
  }
  const UnivariateSeries F = solve_F(12);
  const UnivariateSeries S = sqrt_form_F(12);
  for (int n = 0; n <= 12 && c.ok(); ++n) {
    const BigInt a = F.integer_coefficient(n);
    const BigInt b = S.integer_coefficient(n);
    const BigInt d = closed_f(n);
    c.expect(a == b && b == d, "n=" + std::to_string(n) + ": recurrence " + to_decimal(a) + ", square root form " +
                                   to_decimal(b) + ", binomial sum " + to_decimal(d));
  }
  return c.finish(4, "super-Catalan counts",
                  "brute n=0.." + std::to_string(brute_top) + ": " + join(seen) + "; three forms agree for n<=12");
}

CriterionResult narayana_refinement(std::optional<int> max_n) {
  Checker c;
  const int top = capped(6, max_n);
  for (int n = 1; n <= top && c.ok(); ++n) {
    const auto h = crossing_histogram(n, double_patterns());
    for (int m = 0; m <= n && c.ok(); ++m) {
      const auto it = h.find(m);
      const BigInt brute = it == h.end() ? BigInt(0) : it->second;
      c.expect(brute == refined_double(n, m),
               cell(n, m) + ": brute " + to_decimal(brute) + " != formula " + to_decimal(refined_double(n, m)));
    }
    c.expect(h.empty() || h.rbegin()->first <= n, "n=" + std::to_string(n) + ": more than n crossings");
  }
  return c.finish(5, "Narayana-type crossing refinement", "n=1.." + std::to_string(top) + ", all m");
}

CriterionResult phi_bijection(std::optional<int> max_n) {
  Checker c;
  const int top = capped(6, max_n);
  long instances = 0;
  for (int n = 0; n <= top && c.ok(); ++n) {
    const auto targets = avoiders(n, double_patterns());
    const std::set<Matching> target_set(targets.begin(), targets.end());
    std::set<Matching> image;
    for (const auto& p : paths_without_low_peaks(n)) {
      const Matching m = phi(p);
      const std::string tag = p.to_string() + " -> " + format_matching(m);
      c.expect(target_set.count(m) == 1, tag + " is not a double avoider on [2n]");
      c.expect(image.insert(m).second, tag + " repeats an earlier image");
      c.expect(phi_inv(m) == p, tag + " does not round trip");
      c.expect(static_cast<int>(peaks(p).size()) == crossing_count(m), tag + ": peaks != crossings");
      ++instances;
      if (!c.ok()) break;
    }
    c.expect(image == target_set, "n=" + std::to_string(n) + ": image is not all double avoiders");
    for (const Matching& m : targets) {
      if (!c.expect(phi(phi_inv(m)) == m, format_matching(m) + " does not round trip through phi_inv")) break;
    }
  }
  const auto fig = SchroederPath::parse("UUDDUUUDDHD");
  const auto fig_m = Matching::from_edges({{1, 3}, {2, 12}, {4, 6}, {5, 9}, {7, 8}, {10, 11}});
  c.expect(phi(fig) == fig_m, "UUDDUUUDDHD maps to " + format_matching(phi(fig)));
  c.expect(phi_inv(fig_m) == fig, "worked matching maps back to " + phi_inv(fig_m).to_string());
  return c.finish(6, "phi bijection and peak statistic",
                  "semilength 0.." + std::to_string(top) + ", " + std::to_string(instances) + " paths");
}

CriterionResult rho_bijection_check(std::optional<int> max_n) {
  Checker c;
  const int top = capped(5, max_n);
  long instances = 0;
  for (int n = 0; n <= top && c.ok(); ++n) {
    std::set<OscillatingTableau> images;
    std::set<OscillatingTableau> restricted_images;
    for_each_matching(n, [&](const Matching& m) {
      if (!c.ok()) return;
      const OscillatingTableau t = rho_inv(m);
      c.expect(rho(t) == m, format_matching(m) + " does not round trip through rho");
      c.expect(images.insert(t).second, format_matching(m) + " shares its tableau");
      if (!contains_pattern(m, p12312())) restricted_images.insert(t);
      ++instances;
    });
    std::set<OscillatingTableau> restricted;
    long all = 0;
    for (const auto& t : all_oscillating_tableaux(2 * n)) {
      ++all;
      if (is_restricted(t)) restricted.insert(t);
    }
    c.expect(all == static_cast<long>(images.size()),
             "n=" + std::to_string(n) + ": oscillating tableau count differs from matching count");
    c.expect(restricted == restricted_images,
             "n=" + std::to_string(n) + ": image of the 12312 avoiders is not the restricted tableaux");
  }
  const auto ex = OscillatingTableau::parse("[];[1];[2];[2,1];[1,1];[1];[]");
  const auto ex_m = Matching::from_edges({{1, 5}, {2, 4}, {3, 6}});
  c.expect(rho(ex) == ex_m, "worked tableau maps to " + format_matching(rho(ex)));
  c.expect(rho_inv(ex_m) == ex, "worked matching maps back to " + rho_inv(ex_m).to_string());
  return c.finish(7, "rho and restricted tableaux",
                  "n=0.." + std::to_string(top) + ", " + std::to_string(instances) + " matchings");
}

CriterionResult walks_tau(std::optional<int> max_n) {
  Checker c;
  const int top = capped(6, max_n);
  for (int n = 0; n <= top && c.ok(); ++n) {
    const auto walks = all_walks(n);
    const auto paths = all_lattice_paths(n);
    const BigInt expected = catalan_k(n, 3);
    c.expect(BigInt(static_cast<long>(walks.size())) == expected,
             "n=" + std::to_string(n) + ": |L_n| = " + std::to_string(walks.size()));
    c.expect(BigInt(static_cast<long>(paths.size())) == expected,
             "n=" + std::to_string(n) + ": |P_n| = " + std::to_string(paths.size()));
    std::set<LatticePath> image;
    for (const auto& w : walks) {
      const LatticePath p = tau(w);
      c.expect(tau_inv(p) == w, w.to_string() + " does not round trip through tau");
      c.expect(tableau_of_walk(w).length() == 2 * n && walk_of_tableau(tableau_of_walk(w)) == w,
               w.to_string() + " does not round trip through its tableau");
      image.insert(p);
      if (!c.ok()) break;
    }
    c.expect(image == std::set<LatticePath>(paths.begin(), paths.end()),
             "n=" + std::to_string(n) + ": tau is not onto the lattice paths");
  }
  const std::vector<std::pair<const char*, const char*>> table{
      {"EEWW", "EEEENN"}, {"ENSW", "EEENEN"}, {"EWEW", "EENEEN"}};
  for (const auto& [w, p] : table) {
    const auto got = tau(LatticeWalk::parse(w)).to_string();
    c.expect(got == p, std::string(w) + " maps to " + got + ", expected " + p);
  }
  c.expect(walk_of_tableau(OscillatingTableau::parse("[];[1];[2];[2,1];[1,1];[1];[]")).to_string() == "EENWSW",
           "worked tableau does not encode as EENWSW");
  return c.finish(8, "walks and tau", "n=0.." + std::to_string(top) + ", counts C(n,3), n=2 table reproduced");
}

CriterionResult generating_tree(std::optional<int> max_n) {
  Checker c;
  const auto totals = level_counts(12);
  for (int n = 1; n <= 12 && c.ok(); ++n) {
    c.expect(totals[static_cast<std::size_t>(n - 1)] == catalan_k(n, 3),
             "level " + std::to_string(n) + " total " + to_decimal(totals[static_cast<std::size_t>(n - 1)]) +
                 " != C(n,3)");
  }
  const int top = capped(4, max_n);
  std::vector<std::string> done;
  for (const Pattern& p : gentree_patterns()) {
    if (!c.ok() || top < 1) break;
    const LemmaReport r = validate_lemma(p, top);
    for (std::size_t i = 0; i < r.level_sizes.size(); ++i) {
      c.expect(BigInt(static_cast<long>(r.level_sizes[i])) == totals[i],
               p.to_string() + ": level " + std::to_string(i + 1) + " has " + std::to_string(r.level_sizes[i]) +
                   " avoiders");
    }
    if (!r.rule_violations.empty()) {
      const auto& v = r.rule_violations.front();
      c.expect(false, p.to_string() + ": child labels of " + format_matching(v.matching) + " break the rule (" +
                          std::to_string(r.rule_violations.size()) + " violations)");
    }
    if (!r.coverage_violations.empty()) {
      const auto& v = r.coverage_violations.front();
      c.expect(false, p.to_string() + ": " + format_matching(v.matching) + " produced " +
                          std::to_string(v.occurrences) + " times (" + std::to_string(r.coverage_violations.size()) +
                          " violations)");
    }
    done.push_back(p.to_string());
  }
  return c.finish(9, "generating tree",
                  "levels 1..12 equal C(n,3); rule and coverage hold through level " + std::to_string(top) +
                      " for " + join(done));
}

CriterionResult decomposition_round_trips(std::optional<int> max_n) {
  Checker c;
  const int top = capped(6, max_n);
  long single = 0;
  long both = 0;
  long critical = 0;
  for (int n = 1; n <= top && c.ok(); ++n) {
    for (const Matching& m : avoiders(n, std::vector<Pattern>{p12312()})) {
      const std::string tag = format_matching(m);
      c.expect(recompose(decompose_12312(m)) == m, tag + " does not round trip through the 12312 decomposition");
      if (critical_edge(m)) {
        ++critical;
        c.expect(critical_span_property_holds(m), tag + ": critical span property fails");
        c.expect(quasi_critical_crossing_property_holds(m), tag + ": quasi-critical crossing property fails");
      }
      if (!contains_pattern(m, double_patterns()[1])) {
        c.expect(recompose(decompose_double(m)) == m, tag + " does not round trip through the double decomposition");
        ++both;
      }
      ++single;
      if (!c.ok()) break;
    }
  }
  return c.finish(10, "decomposition round trips",
                  "n=1.." + std::to_string(top) + ": " + std::to_string(single) + " single, " + std::to_string(both) +
                      " double avoiders, " + std::to_string(critical) + " with a critical edge");
}

CriterionResult dispatch(int id, std::optional<int> max_n) {
  switch (id) {
    case 1: return three_catalan_counts(max_n);
    case 2: return crossing_refinement(max_n);
    case 3: return catalan_specialization(max_n);
    case 4: return super_catalan(max_n);
    case 5: return narayana_refinement(max_n);
    case 6: return phi_bijection(max_n);
    case 7: return rho_bijection_check(max_n);
    case 8: return walks_tau(max_n);
    case 9: return generating_tree(max_n);
    default: return decomposition_round_trips(max_n);
  }
}

const char* criterion_name(int id) {
  static const char* names[] = {"3-Catalan counts", "crossing refinement", "Catalan specialization",
                                "super-Catalan counts", "Narayana-type crossing refinement",
                                "phi bijection and peak statistic", "rho and restricted tableaux", "walks and tau",
                                "generating tree", "decomposition round trips"};
  return names[id - 1];
}

}  // namespace

CriterionResult run_criterion(int id, std::optional<int> max_n) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  try {
    return dispatch(id, max_n);
  } catch (const std::exception& e) {
    return {id, criterion_name(id), false, std::string("exception: ") + e.what()};
  }
}

std::vector<CriterionResult> run_all_criteria(std::optional<int> max_n) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, max_n));
  return out;
}

}  // namespace pam
