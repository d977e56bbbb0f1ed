#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pam/bigint.hpp"

namespace pam {

/// Power series in x truncated after x^order, exact rational coefficients.
class UnivariateSeries {
 public:
  explicit UnivariateSeries(int order);

  static UnivariateSeries constant(int order, const Rational& c);
  static UnivariateSeries x(int order);
  static UnivariateSeries from_coefficients(int order, const std::vector<Rational>& coeffs);

  int order() const noexcept { return order_; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// Throws IntegralityError if the coefficient of x^k is not an integer.
  BigInt integer_coefficient(int k) const;

  friend UnivariateSeries operator+(const UnivariateSeries& a, const UnivariateSeries& b);
  friend UnivariateSeries operator-(const UnivariateSeries& a, const UnivariateSeries& b);
  friend UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b);
  friend UnivariateSeries operator*(const Rational& c, const UnivariateSeries& a);
  friend UnivariateSeries operator/(const UnivariateSeries& a, const UnivariateSeries& b);
  friend bool operator==(const UnivariateSeries&, const UnivariateSeries&) = default;

  /// Requires a nonzero constant term.
  UnivariateSeries inverse() const;

  /// The square root with constant term 1; requires constant term 1.
  UnivariateSeries sqrt() const;

  /// Divides by x^k. The low k coefficients must vanish; the result is
  /// known only up to order - k.
  UnivariateSeries divide_by_x_power(int k) const;

  bool is_zero() const;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// Power series in x truncated after x^order whose coefficients are
/// polynomials in y. row(n)[m] is the coefficient of x^n y^m.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);

  static BivariateSeries constant(int order, const Rational& c);
  static BivariateSeries x(int order);
  static BivariateSeries y(int order);

  int order() const noexcept { return order_; }
  const std::vector<Rational>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

  Rational coefficient(int n, int m) const;
  BigInt integer_coefficient(int n, int m) const;
  void set(int n, int m, const Rational& value);

  /// Highest y power with a nonzero coefficient at x^n, -1 for a zero row.
  int y_degree(int n) const;

  /// All nonzero coefficients keyed by (n, m), each checked integral.
  std::map<std::pair<int, int>, BigInt> integer_coefficients() const;

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

  /// Requires the x^0 row to be a nonzero constant.
  BivariateSeries inverse() const;

  bool is_zero() const;

 private:
  void trim();

  int order_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace pam
