#include "pam/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "pam/errors.hpp"
#include "pam/formulas.hpp"
#include "pam/gentree.hpp"
#include "pam/matching.hpp"
#include "pam/phi.hpp"
#include "pam/render.hpp"
#include "pam/schroeder.hpp"
#include "pam/tableau.hpp"
#include "pam/verify.hpp"
#include "pam/walks.hpp"

namespace pam::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised for bad option combinations found after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "json";
  std::vector<std::string> patterns;
  std::optional<int> n;
  std::optional<int> max_n;
  std::optional<int> m;
  std::optional<int> criterion;
  std::string input;
  std::string map;
  std::string formula;
  bool inverse = false;
};

class Output {
 public:
  Output(std::ostream& out, bool text) : out_(out), text_(text) {}

  bool text() const { return text_; }

  void emit(const Json& row, const std::string& plain) {
    if (text_) {
      out_ << plain << '\n';
    } else {
      out_ << row.dump() << '\n';
    }
  }

 private:
  std::ostream& out_;
  bool text_;
};

std::vector<Pattern> parse_patterns(const std::vector<std::string>& words) {
  std::vector<Pattern> out;
  for (const auto& w : words) out.push_back(Pattern::parse(w));
  return out;
}

Json pattern_field(const std::vector<Pattern>& ps) {
  if (ps.size() == 1) return ps.front().to_string();
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(p.to_string());
  return arr;
}

std::vector<int> n_values(const Options& o, const char* verb) {
  if (o.n && o.max_n) throw UsageError(std::string(verb) + ": give --n or --max-n, not both");
  if (o.n) return {*o.n};
  if (o.max_n) {
    std::vector<int> all;
    for (int k = 0; k <= *o.max_n; ++k) all.push_back(k);
    return all;
  }
  throw UsageError(std::string(verb) + ": --n or --max-n is required");
}

int do_enumerate(const Options& o, Output& out) {
  const auto patterns = parse_patterns(o.patterns);
  for (int n : n_values(o, "enumerate")) {
    for_each_matching(n, [&](const Matching& mt) {
      if (!avoids_all(mt, patterns)) return;
      const int crossings = crossing_count(mt);
      if (o.m && crossings != *o.m) return;
      const std::string word = format_matching(mt);
      out.emit(Json{{"n", n}, {"matching", word}, {"crossings", crossings}}, word);
    });
  }
  return kExitOk;
}

int do_count(const Options& o, Output& out) {
  const auto patterns = parse_patterns(o.patterns);
  for (int n : n_values(o, "count")) {
    BigInt count = 0;
    for_each_matching(n, [&](const Matching& mt) {
      if (avoids_all(mt, patterns) && (!o.m || crossing_count(mt) == *o.m)) count += 1;
    });
    Json row{{"n", n}};
    if (!patterns.empty()) row["pattern"] = pattern_field(patterns);
    if (o.m) row["m"] = *o.m;
    row["count"] = to_decimal(count);
    out.emit(row, to_decimal(count));
  }
  return kExitOk;
}

Json violation_json(const LabelMultiset& ms) {
  Json obj = Json::object();
  for (const auto& [label, mult] : ms) obj[std::to_string(label)] = mult;
  return obj;
}

int do_check(const Options& o, Output& out) {
  const auto patterns = parse_patterns(o.patterns);
  if (patterns.empty()) throw UsageError("check: at least one --pattern is required");
  if (!o.input.empty()) {
    const Matching mt = parse_matching(o.input);
    Json contained = Json::array();
    for (const auto& p : patterns) {
      if (contains_pattern(mt, p)) contained.push_back(p.to_string());
    }
    const bool avoids = contained.empty();
    Json row{{"input", format_matching(mt)}, {"pattern", pattern_field(patterns)}, {"avoids", avoids}};
    if (!avoids) row["contains"] = contained;
    row["crossings"] = crossing_count(mt);
    out.emit(row, avoids ? "avoids" : "contains " + contained.dump());
    return avoids ? kExitOk : kExitVerificationFailed;
  }
  if (!o.n) throw UsageError("check: give --input to test a matching, or --n to validate the generating tree");
  bool all_passed = true;
  for (const auto& p : patterns) {
    if (!is_gentree_pattern(p)) throw UsageError("check: pattern " + p.to_string() + " is not a generating-tree pattern");
    const LemmaReport r = validate_lemma(p, *o.n);
    Json rules = Json::array();
    for (const auto& v : r.rule_violations) {
      rules.push_back({{"matching", format_matching(v.matching)},
                       {"label", v.label},
                       {"expected", violation_json(v.expected)},
                       {"actual", violation_json(v.actual)},
                       {"rejected", v.rejected}});
    }
    Json coverage = Json::array();
    for (const auto& v : r.coverage_violations) {
      coverage.push_back({{"matching", format_matching(v.matching)}, {"occurrences", v.occurrences}, {"avoids", v.avoids}});
    }
    Json row{{"pattern", p.to_string()},
             {"n", r.n},
             {"level_sizes", r.level_sizes},
             {"rule_violations", rules},
             {"coverage_violations", coverage}};
    all_passed = all_passed && r.passed();
    std::string sizes;
    for (auto s : r.level_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    out.emit(row, p.to_string() + " n=" + std::to_string(r.n) + " " + (r.passed() ? "pass" : "FAIL") + " levels " + sizes);
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

struct Certificate {
  std::string input;
  std::string output;
  bool roundtrip = false;
};

struct MapSpec {
  std::function<Certificate(const std::string&)> apply;
  std::function<std::vector<std::string>(int)> domain;
};

std::vector<std::string> restricted_tableaux(int n) {
  std::vector<std::string> out;
  for (const auto& t : all_oscillating_tableaux(2 * n)) {
    if (is_restricted(t)) out.push_back(t.to_string());
  }
  return out;
}

template <class T, class F>
std::vector<std::string> strings_of(const std::vector<T>& items, F to_string) {
  std::vector<std::string> out;
  for (const auto& x : items) out.push_back(to_string(x));
  return out;
}

MapSpec map_spec(const std::string& name, bool inverse) {
  const auto matchings_of = [](const std::vector<Matching>& ms) { return strings_of(ms, format_matching); };
  if (name == "phi" && !inverse) {
    return {[](const std::string& s) {
              const auto p = SchroederPath::parse(s);
              const Matching mt = phi(p);
              return Certificate{p.to_string(), format_matching(mt), phi_inv(mt) == p};
            },
            [](int n) { return strings_of(paths_without_low_peaks(n), [](const auto& p) { return p.to_string(); }); }};
  }
  if (name == "phi") {
    return {[](const std::string& s) {
              const Matching mt = parse_matching(s);
              const SchroederPath p = phi_inv(mt);
              return Certificate{format_matching(mt), p.to_string(), phi(p) == mt};
            },
            [=](int n) {
              const std::vector<Pattern> ps{Pattern::parse("12312"), Pattern::parse("121323")};
              return matchings_of(avoiders(n, ps));
            }};
  }
  if (name == "rho" && !inverse) {
    return {[](const std::string& s) {
              const auto t = OscillatingTableau::parse(s);
              const Matching mt = rho(t);
              return Certificate{t.to_string(), format_matching(mt), rho_inv(mt) == t};
            },
            [](int n) {
              return strings_of(all_oscillating_tableaux(2 * n), [](const auto& t) { return t.to_string(); });
            }};
  }
  if (name == "rho") {
    return {[](const std::string& s) {
              const Matching mt = parse_matching(s);
              const OscillatingTableau t = rho_inv(mt);
              return Certificate{format_matching(mt), t.to_string(), rho(t) == mt};
            },
            [=](int n) { return matchings_of(all_matchings(n)); }};
  }
  if (name == "tau" && !inverse) {
    return {[](const std::string& s) {
              const auto w = LatticeWalk::parse(s);
              const LatticePath p = tau(w);
              return Certificate{w.to_string(), p.to_string(), tau_inv(p) == w};
            },
            [](int n) { return strings_of(all_walks(n), [](const auto& w) { return w.to_string(); }); }};
  }
  if (name == "tau") {
    return {[](const std::string& s) {
              const auto p = LatticePath::parse(s);
              const LatticeWalk w = tau_inv(p);
              return Certificate{p.to_string(), w.to_string(), tau(w) == p};
            },
            [](int n) { return strings_of(all_lattice_paths(n), [](const auto& p) { return p.to_string(); }); }};
  }
  if (name == "walk" && !inverse) {
    return {[](const std::string& s) {
              const auto t = OscillatingTableau::parse(s);
              const LatticeWalk w = walk_of_tableau(t);
              return Certificate{t.to_string(), w.to_string(), tableau_of_walk(w) == t};
            },
            restricted_tableaux};
  }
  if (name == "walk") {
    return {[](const std::string& s) {
              const auto w = LatticeWalk::parse(s);
              const OscillatingTableau t = tableau_of_walk(w);
              return Certificate{w.to_string(), t.to_string(), walk_of_tableau(t) == w};
            },
            [](int n) { return strings_of(all_walks(n), [](const auto& w) { return w.to_string(); }); }};
  }
  throw UsageError("bijection: unknown map " + name);
}

int do_bijection(const Options& o, Output& out) {
  if (o.map.empty()) throw UsageError("bijection: --map is required");
  const MapSpec spec = map_spec(o.map, o.inverse);
  std::vector<std::string> inputs;
  if (o.n || o.max_n) {
    if (!o.input.empty()) throw UsageError("bijection: give --input or an --n range, not both");
    for (int n : n_values(o, "bijection")) {
      auto batch = spec.domain(n);
      inputs.insert(inputs.end(), batch.begin(), batch.end());
    }
  } else {
    inputs.push_back(o.input);
  }
  bool all_roundtrip = true;
  for (const auto& in : inputs) {
    const Certificate c = spec.apply(in);
    all_roundtrip = all_roundtrip && c.roundtrip;
    const std::string map_name = o.inverse ? o.map + "_inv" : o.map;
    out.emit(Json{{"map", map_name}, {"input", c.input}, {"output", c.output}, {"roundtrip", c.roundtrip}},
             c.input + " -> " + c.output + (c.roundtrip ? "" : " (round trip FAILED)"));
  }
  return all_roundtrip ? kExitOk : kExitVerificationFailed;
}

int do_series(const Options& o, Output& out) {
  if (!o.n) throw UsageError("series: --n (the truncation order) is required");
  const int order = *o.n;
  const std::string& f = o.formula;
  if (f == "crossings") {
    const BivariateSeries G = solve_G(order);
    for (int n = 0; n <= order; ++n) {
      for (int m = 0; m <= std::max(0, G.y_degree(n)); ++m) {
        if (o.m && m != *o.m) continue;
        const BigInt series = G.integer_coefficient(n, m);
        Json row{{"formula", f}, {"n", n}, {"m", m}, {"value", to_decimal(series)}};
        row["closed"] = to_decimal(closed_G_coeff(n, m));
        if (n >= 1) row["alternating_sum"] = to_decimal(crossing_refined_12312(n, m));
        out.emit(row, std::to_string(n) + " " + std::to_string(m) + " " + to_decimal(series));
      }
    }
    return kExitOk;
  }
  if (f == "super-catalan") {
    const UnivariateSeries F = solve_F(order);
    const UnivariateSeries S = sqrt_form_F(order);
    bool agree = true;
    for (int n = 0; n <= order; ++n) {
      const BigInt a = F.integer_coefficient(n);
      const BigInt b = S.integer_coefficient(n);
      const BigInt c = closed_f(n);
      agree = agree && a == b && b == c;
      out.emit(Json{{"formula", f},
                    {"n", n},
                    {"value", to_decimal(a)},
                    {"sqrt_form", to_decimal(b)},
                    {"binomial_sum", to_decimal(c)}},
               std::to_string(n) + " " + to_decimal(a));
    }
    return agree ? kExitOk : kExitVerificationFailed;
  }
  if (f == "catalan3") {
    for (int n = 0; n <= order; ++n) {
      const BigInt c = catalan_k(n, 3);
      out.emit(Json{{"formula", f}, {"n", n}, {"value", to_decimal(c)}}, std::to_string(n) + " " + to_decimal(c));
    }
    return kExitOk;
  }
  if (f == "narayana") {
    for (int n = 1; n <= order; ++n) {
      for (int m = 0; m < n; ++m) {
        if (o.m && m != *o.m) continue;
        const BigInt v = refined_double(n, m);
        out.emit(Json{{"formula", f}, {"n", n}, {"m", m}, {"value", to_decimal(v)}},
                 std::to_string(n) + " " + std::to_string(m) + " " + to_decimal(v));
      }
    }
    return kExitOk;
  }
  if (f == "gentree") {
    if (order < 1) throw UsageError("series: gentree needs --n >= 1");
    const auto totals = level_counts(order);
    bool agree = true;
    for (int n = 1; n <= order; ++n) {
      const BigInt& t = totals[static_cast<std::size_t>(n - 1)];
      const bool same = t == catalan_k(n, 3);
      agree = agree && same;
      out.emit(Json{{"formula", f}, {"n", n}, {"value", to_decimal(t)}, {"matches_catalan3", same}},
               std::to_string(n) + " " + to_decimal(t));
    }
    return agree ? kExitOk : kExitVerificationFailed;
  }
  throw UsageError("series: unknown --formula '" + f + "'");
}

int do_verify_all(const Options& o, Output& out) {
  std::vector<CriterionResult> results;
  if (o.criterion) {
    results.push_back(run_criterion(*o.criterion, o.max_n));
  } else {
    results = run_all_criteria(o.max_n);
  }
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out.emit(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}},
             std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + ": " + r.detail);
  }
  return all ? kExitOk : kExitVerificationFailed;
}

int do_render(const Options& o, Output& out) {
  if (o.input.empty()) throw UsageError("render: --input is required");
  const Matching mt = parse_matching(o.input);
  std::string diagram;
  try {
    diagram = render_arc_diagram(mt);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  if (out.text()) {
    out.emit(Json{}, diagram.substr(0, diagram.size() - 1));
  } else {
    out.emit(Json{{"input", format_matching(mt)}, {"diagram", diagram}}, "");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding matchings: enumeration, bijections, series and verification", "pamatch"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_n = [&](CLI::App* sub, int hi) {
    sub->add_option("--n", o.n, "Size n (matchings on [2n])")->check(CLI::Range(0, hi));
  };
  const auto add_max_n = [&](CLI::App* sub, int hi) {
    sub->add_option("--max-n", o.max_n, "Largest n")->check(CLI::Range(0, hi));
  };
  const auto add_patterns = [&](CLI::App* sub) {
    sub->add_option("--pattern", o.patterns, "Pattern to avoid (repeatable)");
  };
  const auto add_m = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "Restrict to this number of crossings")->check(CLI::NonNegativeNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List matchings on [2n] avoiding the patterns");
  add_n(enumerate, 10);
  add_max_n(enumerate, 10);
  add_patterns(enumerate);
  add_m(enumerate);
  add_format(enumerate);

  auto* count = app.add_subcommand("count", "Count matchings on [2n] avoiding the patterns");
  add_n(count, 10);
  add_max_n(count, 10);
  add_patterns(count);
  add_m(count);
  add_format(count);

  auto* check = app.add_subcommand("check", "Test a matching for patterns, or validate the generating tree");
  check->add_option("--input", o.input, "Matching to test");
  add_patterns(check);
  add_n(check, 6);
  add_format(check);

  auto* bijection = app.add_subcommand("bijection", "Apply a bijection and certify the round trip");
  bijection->add_option("--map", o.map, "Bijection")->check(CLI::IsMember({"phi", "rho", "tau", "walk"}));
  bijection->add_option("--input", o.input, "Object to map");
  bijection->add_flag("--inverse", o.inverse, "Apply the inverse map");
  add_n(bijection, 7);
  add_max_n(bijection, 7);
  add_format(bijection);

  auto* series = app.add_subcommand("series", "Series coefficients and closed forms");
  series->add_option("--formula", o.formula, "Which series")
      ->required()
      ->check(CLI::IsMember({"crossings", "super-catalan", "catalan3", "narayana", "gentree"}));
  add_n(series, 60);
  add_m(series);
  add_format(series);

  auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance suites");
  add_max_n(verify_all, 7);
  verify_all->add_option("--criterion", o.criterion, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));
  add_format(verify_all);

  auto* render = app.add_subcommand("render", "Draw an ASCII arc diagram");
  render->add_option("--input", o.input, "Matching to draw");
  add_format(render);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Output output(out, o.format == "text");
  try {
    if (enumerate->parsed()) return do_enumerate(o, output);
    if (count->parsed()) return do_count(o, output);
    if (check->parsed()) return do_check(o, output);
    if (bijection->parsed()) return do_bijection(o, output);
    if (series->parsed()) return do_series(o, output);
    if (verify_all->parsed()) return do_verify_all(o, output);
    return do_render(o, output);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace pam::cli
