#include "doctest.h"

#include "oracles.hpp"
#include "pam/decomposition.hpp"
#include "pam/errors.hpp"

using namespace pam;

namespace {

Matching M(const char* w) { return parse_matching(w); }

const std::vector<Pattern>& single() {
  static const std::vector<Pattern> ps{Pattern::parse("12312")};
  return ps;
}

const std::vector<Pattern>& both() {
  static const std::vector<Pattern> ps{Pattern::parse("12312"), Pattern::parse("121323")};
  return ps;
}

// Direct restatement of the span property on arc lists.
bool span_property_oracle(const Matching& m) {
  const auto arcs = oracle::arcs(canonical_word(m));
  const int last = m.node_count();
  int j = 0;
  for (const auto& [a, b] : arcs) {
    if (b == last) j = a;
  }
  int x = 0, y = 0;
  for (const auto& [a, b] : arcs) {
    if (a < j && j < b && b < last && b > y) {
      x = a;
      y = b;
    }
  }
  if (y == 0) return true;
  std::vector<std::pair<int, int>> inside;
  for (const auto& [a, b] : arcs) {
    const bool opener_inside = j < a && a < y;
    const bool closer_inside = j < b && b < y;
    if (opener_inside) return false;
    if (closer_inside) {
      if (!(x < a && a < j)) return false;
      inside.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : inside) {
    for (const auto& [c, d] : inside) {
      if (a < c && c < b && b < d) return false;
    }
  }
  return true;
}

int nodes(const Matching& m) { return m.node_count(); }

}  // namespace

TEST_CASE("decomposing 1122") {
  const auto d = decompose_12312(M("1122"));
  CHECK(d.m == 0);
  CHECK(d.j == 3);
  CHECK(d.thetas.empty());
  CHECK(d.alpha == M("11"));
  CHECK(d.beta.empty());
  CHECK(recompose(d) == M("1122"));
}

TEST_CASE("decomposing 1212") {
  const auto d = decompose_12312(M("1212"));
  CHECK(d.m == 1);
  CHECK(d.j == 2);
  REQUIRE(d.thetas.size() == 1);
  CHECK(d.thetas[0] == M("11"));
  CHECK(d.alpha.empty());
  CHECK(d.beta.empty());
  CHECK(quasi_critical_edges(M("1212")) == std::vector<Edge>{{1, 3}});
  CHECK(recompose(d) == M("1212"));
}

TEST_CASE("decomposing 121323") {
  const auto d = decompose_12312(M("121323"));
  CHECK(d.m == 1);
  REQUIRE(d.thetas.size() == 1);
  CHECK(d.thetas[0] == M("1212"));
  CHECK(d.alpha.empty());
  CHECK(d.beta.empty());
  CHECK(recompose(d) == M("121323"));
  CHECK(decompose_12312(M("11")).m == 0);
  CHECK(decompose_12312(M("11")).alpha.empty());
}

TEST_CASE("double decomposition examples") {
  const auto d = decompose_double(M("1212"));
  CHECK(d.m == 1);
  CHECK(d.thetas == std::vector<Matching>{Matching{}, Matching{}});
  CHECK(d.beta.empty());
  CHECK(recompose(DecompositionDouble{0, {Matching{}}, M("11")}) == M("1221"));
  CHECK(recompose(DecompositionDouble{0, {M("11")}, Matching{}}) == M("1122"));
}

TEST_CASE("decomposition rejects bad input") {
  CHECK_THROWS_AS(decompose_12312(M("123123")), DomainError);
  CHECK_THROWS_AS(decompose_12312(M("")), std::invalid_argument);
  CHECK_THROWS_AS(decompose_double(M("121323")), DomainError);

  auto d = decompose_12312(M("1212"));
  d.cut_points.back() += 1;
  CHECK_THROWS_AS(recompose(d), std::invalid_argument);
  auto e = decompose_12312(M("1212"));
  e.thetas[0] = Matching{};
  CHECK_THROWS_AS(recompose(e), std::invalid_argument);
}

TEST_CASE("single-pattern decomposition round trips and sizes") {
  for (int n = 1; n <= 6; ++n) {
    for (const Matching& m : avoiders(n, single())) {
      INFO(format_matching(m));
      const auto d = decompose_12312(m);
      CHECK(static_cast<int>(d.thetas.size()) == d.m);
      CHECK(static_cast<int>(quasi_critical_edges(m).size()) == d.m);
      int total = nodes(d.alpha) + nodes(d.beta);
      for (const auto& t : d.thetas) {
        CHECK_FALSE(t.empty());
        CHECK_FALSE(contains_pattern(t, single()[0]));
        total += nodes(t);
      }
      CHECK(total == 2 * n - 2);
      CHECK_FALSE(contains_pattern(d.alpha, single()[0]));
      CHECK_FALSE(contains_pattern(d.beta, single()[0]));
      CHECK(recompose(d) == m);
    }
  }
}

TEST_CASE("double decomposition round trips and sizes") {
  for (int n = 1; n <= 6; ++n) {
    for (const Matching& m : avoiders(n, both())) {
      INFO(format_matching(m));
      const auto d = decompose_double(m);
      CHECK(static_cast<int>(d.thetas.size()) == d.m + 1);
      int total = nodes(d.beta);
      for (const auto& t : d.thetas) total += nodes(t);
      CHECK(total == 2 * n - 2 - 2 * d.m);
      CHECK(recompose(d) == m);
    }
  }
}

TEST_CASE("structural predicates") {
  CHECK_FALSE(critical_span_property_holds(M("123123")));
  CHECK(critical_span_property_holds(M("1122")));
  for (int n = 1; n <= 6; ++n) {
    for (const Matching& m : avoiders(n, single())) {
      INFO(format_matching(m));
      CHECK(span_property_oracle(m));
      CHECK(critical_span_property_holds(m));
      CHECK(quasi_critical_crossing_property_holds(m));
    }
  }
  // The library predicate and the oracle agree on every matching, avoider
  // or not.
  for (const Matching& m : all_matchings(5)) {
    CHECK(critical_span_property_holds(m) == span_property_oracle(m));
  }
}
