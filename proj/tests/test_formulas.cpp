#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "pam/formulas.hpp"
#include "pam/matching.hpp"

using namespace pam;

namespace {

// Crossing histogram of the avoiders of `patterns`, from oracle words.
std::map<int, long> histogram(int n, const std::vector<oracle::Word>& patterns) {
  std::map<int, long> h;
  for (const auto& w : oracle::all_words(n)) {
    bool avoids = true;
    for (const auto& p : patterns) avoids = avoids && !oracle::contains(w, p);
    if (avoids) ++h[oracle::crossings(w)];
  }
  return h;
}

const oracle::Word k12312{1, 2, 3, 1, 2};
const oracle::Word k121323{1, 2, 1, 3, 2, 3};

}  // namespace

TEST_CASE("k-Catalan numbers") {
  const std::vector<long> c3{1, 1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715, 8414640, 50067108};
  for (int n = 0; n <= 12; ++n) {
    CHECK(catalan_k(n, 3) == c3[static_cast<std::size_t>(n)]);
    CHECK(catalan_k(n, 3) == static_cast<long>(oracle::binom(3 * n, n) / static_cast<std::uint64_t>(2 * n + 1)));
    CHECK(catalan_k(n, 2) == static_cast<long>(oracle::binom(2 * n, n) / static_cast<std::uint64_t>(n + 1)));
  }
  CHECK(to_decimal(catalan_k(40, 3)) == "1414282077098335379544565517191");
  CHECK_THROWS(catalan_k(-1, 3));
  CHECK_THROWS(catalan_k(3, 1));
}

TEST_CASE("12312 crossing histograms") {
  const std::map<int, std::map<int, long>> frozen{
      {1, {{0, 1}}},
      {2, {{0, 2}, {1, 1}}},
      {3, {{0, 5}, {1, 5}, {2, 2}}},
      {4, {{0, 14}, {1, 21}, {2, 15}, {3, 5}}},
      {5, {{0, 42}, {1, 84}, {2, 84}, {3, 49}, {4, 14}}},
  };
  for (const auto& [n, h] : frozen) {
    CHECK(histogram(n, {k12312}) == h);
    for (int m = 0; m <= n + 1; ++m) {
      const long expected = h.count(m) ? h.at(m) : 0;
      CHECK(crossing_refined_12312(n, m) == expected);
      CHECK(closed_G_coeff(n, m) == expected);
    }
  }
}

TEST_CASE("series solution of the cubic") {
  const int N = 7;
  const BivariateSeries G = solve_G(N);
  CHECK(residual_G_cubic(G).is_zero());
  const BivariateSeries B = solve_B(N);
  CHECK(residual_G_B(G, B).is_zero());
  CHECK(residual_B(G, B).is_zero());
  CHECK(residual_B_quotient(G, B).is_zero());
  CHECK(G.coefficient(0, 0) == 1);
  for (int n = 1; n <= N; ++n) {
    BigInt row_total = 0;
    for (int m = 0; m <= G.y_degree(n); ++m) {
      CHECK(G.integer_coefficient(n, m) == crossing_refined_12312(n, m));
      CHECK(G.integer_coefficient(n, m) == closed_G_coeff(n, m));
      row_total += G.integer_coefficient(n, m);
    }
    CHECK(row_total == catalan_k(n, 3));
    CHECK(G.y_degree(n) == n - 1);
  }
  // A perturbed series is not a solution.
  BivariateSeries H = G;
  H.set(3, 1, G.coefficient(3, 1) + 1);
  CHECK_FALSE(residual_G_cubic(H).is_zero());
}

TEST_CASE("Catalan specialization") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(crossing_refined_12312(n, 0) == catalan_k(n, 2));
    CHECK(corollary_identity_check(n));
  }
}

TEST_CASE("super-Catalan numbers three ways") {
  const std::vector<long> f{1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859, 2646723, 13648869};
  const auto F = solve_F(12);
  const auto S = sqrt_form_F(12);
  for (int n = 0; n <= 12; ++n) {
    CHECK(closed_f(n) == f[static_cast<std::size_t>(n)]);
    CHECK(F.integer_coefficient(n) == f[static_cast<std::size_t>(n)]);
    CHECK(S.integer_coefficient(n) == f[static_cast<std::size_t>(n)]);
  }
  for (int n = 0; n <= 5; ++n) {
    long brute = 0;
    for (const auto& [m, c] : histogram(n, {k12312, k121323})) brute += c;
    CHECK(closed_f(n) == brute);
  }
}

TEST_CASE("double-avoider crossing refinement") {
  const std::map<int, std::map<int, long>> frozen{
      {3, {{0, 5}, {1, 5}, {2, 1}}},
      {4, {{0, 14}, {1, 21}, {2, 9}, {3, 1}}},
      {5, {{0, 42}, {1, 84}, {2, 56}, {3, 14}, {4, 1}}},
  };
  for (const auto& [n, h] : frozen) {
    CHECK(histogram(n, {k12312, k121323}) == h);
    for (int m = 0; m <= n; ++m) CHECK(refined_double(n, m) == (h.count(m) ? h.at(m) : 0));
  }
  // Summing the refinement recovers f_n.
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (int m = 0; m <= n; ++m) sum += refined_double(n, m);
    CHECK(sum == closed_f(n));
  }
}

TEST_CASE("small hand-checked values") {
  CHECK(catalan_k(3, 3) == 12);
  for (int k = 2; k <= 6; ++k) CHECK(catalan_k(1, k) == 1);
  CHECK(crossing_refined_12312(2, 1) == 1);
  CHECK(closed_G_coeff(2, 1) == 1);
  CHECK(closed_G_coeff(0, 0) == 1);
  CHECK(solve_G(4).coefficient(2, 1) == 1);
  CHECK(solve_B(4).coefficient(0, 0) == 0);
  CHECK(narayana(3, 1) == 3);
  CHECK(refined_double(2, 1) == 1);
  CHECK(corollary_lhs(2) == 2);
  CHECK(corollary_identity_check(1));
  CHECK(closed_f(1) == 1);
}

TEST_CASE("crossing histograms agree with enumeration through n = 7") {
  const std::vector<Pattern> single{Pattern::parse("12312")};
  const BivariateSeries G = solve_G(7);
  for (int n = 6; n <= 7; ++n) {
    std::map<int, long> h;
    for_each_matching(n, [&](const Matching& m) {
      if (!contains_pattern(m, single[0])) ++h[crossing_count(m)];
    });
    for (int m = 0; m <= n; ++m) {
      const long expected = h.count(m) ? h.at(m) : 0;
      CHECK(crossing_refined_12312(n, m) == expected);
      CHECK(closed_G_coeff(n, m) == expected);
      CHECK(G.integer_coefficient(n, m) == expected);
    }
  }
}

TEST_CASE("G at y = 1 gives the 3-Catalan numbers") {
  const BivariateSeries G = solve_G(12);
  for (int n = 0; n <= 12; ++n) {
    BigInt total = 0;
    for (int m = 0; m <= G.y_degree(n); ++m) total += G.integer_coefficient(n, m);
    CHECK(total == catalan_k(n, 3));
  }
}

TEST_CASE("Narayana numbers") {
  for (int n = 1; n <= 8; ++n) CHECK(narayana(n, 0) == 1);
  CHECK(narayana(4, 0) == 1);
  CHECK(narayana(4, 1) == 6);
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(4, 3) == 1);
  for (int n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (int k = 0; k < n; ++k) sum += narayana(n, k);
    CHECK(sum == catalan_k(n, 2));
  }
}
