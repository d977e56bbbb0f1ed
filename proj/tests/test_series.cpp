#include "doctest.h"

#include "pam/errors.hpp"
#include "pam/series.hpp"

using namespace pam;

TEST_CASE("univariate arithmetic") {
  const int N = 6;
  const auto one = UnivariateSeries::constant(N, 1);
  const auto x = UnivariateSeries::x(N);
  const auto geometric = (one - x).inverse();
  for (int k = 0; k <= N; ++k) CHECK(geometric[k] == 1);
  CHECK((geometric * (one - x)) == one);
  CHECK((one / (one - x)) == geometric);

  const auto sq = (one + x) * (one + x);
  CHECK(sq.sqrt() == one + x);
  CHECK(sq[1] == 2);
  CHECK((Rational(1, 2) * sq)[2] == Rational(1, 2));
  CHECK((x * x).divide_by_x_power(2)[0] == 1);
  CHECK((x - x).is_zero());
}

TEST_CASE("univariate preconditions") {
  const auto x = UnivariateSeries::x(4);
  CHECK_THROWS(x.inverse());
  CHECK_THROWS(x.divide_by_x_power(2));
  CHECK_THROWS((UnivariateSeries::constant(4, 2)).sqrt());
  CHECK_THROWS_AS((Rational(1, 2) * x).integer_coefficient(1), IntegralityError);
}

TEST_CASE("catalan series by square root") {
  // (1 - sqrt(1 - 4x)) / (2x)
  const int N = 10;
  const auto one = UnivariateSeries::constant(N + 1, 1);
  const auto x = UnivariateSeries::x(N + 1);
  const auto c = Rational(1, 2) * (one - (one - Rational(4) * x).sqrt()).divide_by_x_power(1);
  const std::vector<long> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int k = 0; k <= N; ++k) CHECK(c.integer_coefficient(k) == expected[static_cast<std::size_t>(k)]);
}

TEST_CASE("bivariate arithmetic") {
  const int N = 4;
  const auto one = BivariateSeries::constant(N, 1);
  const auto x = BivariateSeries::x(N);
  const auto y = BivariateSeries::y(N);
  // 1 / (1 - x - xy) has coefficient binom(n, m) at x^n y^m.
  const auto s = (one - x - x * y).inverse();
  CHECK(s.coefficient(4, 2) == 6);
  CHECK(s.coefficient(3, 3) == 1);
  CHECK(s.coefficient(3, 4) == 0);
  CHECK(s.y_degree(4) == 4);
  CHECK((s * (one - x - x * y)) == one);
  CHECK(s.integer_coefficients().size() == 15);

  BivariateSeries t(N);
  t.set(2, 1, Rational(3));
  CHECK(t.integer_coefficient(2, 1) == 3);
  CHECK((t - t).is_zero());
  CHECK_THROWS(y.inverse());
}
