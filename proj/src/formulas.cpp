#include "pam/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace pam {
namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string cell(const char* name, int n, int m) {
  return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

template <class Series, class Step>
Series fixed_point(Series current, int order, Step step, const char* what) {
  // From a correct x^0 term, pass k fixes x^k; pass order+1 must be idle.
  for (int pass = 0; pass <= order; ++pass) {
    Series next = step(current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw std::logic_error(std::string(what) + ": no fixed point after " + std::to_string(order + 1) + " passes");
}

}  // namespace

BigInt catalan_k(int n, int k) {
  require(n >= 0 && k >= 2, "catalan_k needs n >= 0 and k >= 2");
  const Rational v = ratio(binomial(static_cast<long>(k) * n, n), BigInt((k - 1) * n + 1));
  return to_integer(v, cell("catalan_k", n, k));
}

BigInt crossing_refined_12312(int n, int m) {
  require(n >= 1 && m >= 0, "crossing_refined_12312 needs n >= 1 and m >= 0");
  Rational sum = 0;
  for (int i = n; i <= 2 * n - 1; ++i) {
    Rational term = ratio(binomial(i, n) * binomial(3L * n, i + 1 + n) * binomial(i - n, m), BigInt(i));
    if ((n + m + i) % 2 != 0) term = -term;
    sum += term;
  }
  return to_integer(sum, cell("crossing_refined_12312", n, m));
}

BigInt closed_G_coeff(int n, int m) {
  require(n >= 0 && m >= 0, "closed_G_coeff needs n, m >= 0");
  // Only j = n contributes to x^n; binom(3n, i+1+n) vanishes once i >= 2n.
  std::vector<Rational> poly{n == 0 ? Rational(1) : Rational(0)};
  for (int i = std::max(1, n); i <= 2 * n - 1; ++i) {
    const Rational weight = ratio(binomial(i, n) * binomial(3L * n, i + 1 + n), BigInt(i));
    if (weight == 0) continue;
    const int e = i - n;
    if (poly.size() < static_cast<std::size_t>(e) + 1) poly.resize(static_cast<std::size_t>(e) + 1);
    // (y - 1)^e = sum_k binom(e, k) y^k (-1)^{e-k}
    for (int k = 0; k <= e; ++k) {
      Rational c = weight * binomial(e, k);
      if ((e - k) % 2 != 0) c = -c;
      poly[static_cast<std::size_t>(k)] += c;
    }
  }
  const Rational v = static_cast<std::size_t>(m) < poly.size() ? poly[static_cast<std::size_t>(m)] : Rational(0);
  return to_integer(v, cell("closed_G_coeff", n, m));
}

BivariateSeries solve_G(int order) {
  const auto one = BivariateSeries::constant(order, 1);
  const auto x = BivariateSeries::x(order);
  const auto y = BivariateSeries::y(order);
  return fixed_point(
      one, order,
      [&](const BivariateSeries& G) {
        const BivariateSeries H = G - one;
        return one + (x * G * G * G + y * H * H) * G.inverse();
      },
      "solve_G");
}

BivariateSeries solve_B(int order) {
  const BivariateSeries G = solve_G(order);
  return (G - BivariateSeries::constant(order, 1)) * G.inverse();
}

BivariateSeries residual_G_B(const BivariateSeries& G, const BivariateSeries& B) {
  const int N = G.order();
  const auto one = BivariateSeries::constant(N, 1);
  const auto denom = one - BivariateSeries::y(N) * B;
  return G - one - BivariateSeries::x(N) * G * G * denom.inverse();
}

BivariateSeries residual_B(const BivariateSeries& G, const BivariateSeries& B) {
  const int N = G.order();
  const auto denom = BivariateSeries::constant(N, 1) - BivariateSeries::y(N) * B;
  return B - BivariateSeries::x(N) * G * denom.inverse();
}

BivariateSeries residual_B_quotient(const BivariateSeries& G, const BivariateSeries& B) {
  return B * G - (G - BivariateSeries::constant(G.order(), 1));
}

BivariateSeries residual_G_cubic(const BivariateSeries& G) {
  const int N = G.order();
  const auto H = G - BivariateSeries::constant(N, 1);
  return BivariateSeries::x(N) * G * G * G + G - G * G + BivariateSeries::y(N) * H * H;
}

UnivariateSeries solve_F(int order) {
  const auto one = UnivariateSeries::constant(order, 1);
  const auto x = UnivariateSeries::x(order);
  return fixed_point(
      one, order, [&](const UnivariateSeries& F) { return one + x * F * F / (one - x * F); }, "solve_F");
}

UnivariateSeries sqrt_form_F(int order) {
  // The division by x costs one order, so work one order higher.
  const int N = order + 1;
  const auto x = UnivariateSeries::x(N);
  const auto one = UnivariateSeries::constant(N, 1);
  const auto disc = one - Rational(6) * x + x * x;
  const auto numerator = one + x - disc.sqrt();
  return Rational(1, 4) * numerator.divide_by_x_power(1);
}

BigInt closed_f(int n) {
  require(n >= 0, "closed_f needs n >= 0");
  if (n == 0) return 1;
  Rational sum = 0;
  for (int j = 1; j <= n; ++j) {
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(j - 1));
    sum += ratio(pow2 * binomial(n, j) * binomial(n, j - 1), BigInt(n));
  }
  return to_integer(sum, "closed_f(" + std::to_string(n) + ")");
}

BigInt narayana(int n, int k) {
  require(n >= 1 && k >= 0, "narayana needs n >= 1 and k >= 0");
  return to_integer(ratio(binomial(n, k) * binomial(n, k + 1), BigInt(n)), cell("narayana", n, k));
}

BigInt refined_double(int n, int m) {
  require(n >= 1 && m >= 0, "refined_double needs n >= 1 and m >= 0");
  return to_integer(ratio(binomial(n, m) * binomial(2L * n - m, n + 1), BigInt(n)), cell("refined_double", n, m));
}

BigInt corollary_lhs(int n) {
  require(n >= 1, "corollary identity needs n >= 1");
  Rational sum = 0;
  for (int i = n; i <= 2 * n - 1; ++i) {
    Rational term = ratio(binomial(i, n) * binomial(3L * n, i + 1 + n), BigInt(i));
    if ((n + i) % 2 != 0) term = -term;
    sum += term;
  }
  return to_integer(sum, "corollary_lhs(" + std::to_string(n) + ")");
}

bool corollary_identity_check(int n) { return corollary_lhs(n) == catalan_k(n, 2); }

}  // namespace pam
