#include "pam/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pam {
namespace {

void require_same_order(int a, int b) {
  if (a != b) throw std::invalid_argument("series orders differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

void poly_add_into(std::vector<Rational>& acc, const std::vector<Rational>& b, int sign) {
  if (acc.size() < b.size()) acc.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sign > 0) {
      acc[i] += b[i];
    } else {
      acc[i] -= b[i];
    }
  }
}

void poly_trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

// --- UnivariateSeries -------------------------------------------------------

UnivariateSeries::UnivariateSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

UnivariateSeries UnivariateSeries::constant(int order, const Rational& c) {
  UnivariateSeries s(order);
  s[0] = c;
  return s;
}

UnivariateSeries UnivariateSeries::x(int order) {
  UnivariateSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

UnivariateSeries UnivariateSeries::from_coefficients(int order, const std::vector<Rational>& coeffs) {
  UnivariateSeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k) s.coeffs_[k] = coeffs[k];
  return s;
}

BigInt UnivariateSeries::integer_coefficient(int k) const {
  return to_integer((*this)[k], "coefficient of x^" + std::to_string(k));
}

UnivariateSeries operator+(const UnivariateSeries& a, const UnivariateSeries& b) {
  require_same_order(a.order_, b.order_);
  UnivariateSeries r(a.order_);
  for (int k = 0; k <= a.order_; ++k) r[k] = a[k] + b[k];
  return r;
}

UnivariateSeries operator-(const UnivariateSeries& a, const UnivariateSeries& b) {
  require_same_order(a.order_, b.order_);
  UnivariateSeries r(a.order_);
  for (int k = 0; k <= a.order_; ++k) r[k] = a[k] - b[k];
  return r;
}

UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b) {
  require_same_order(a.order_, b.order_);
  UnivariateSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a[i] == 0) continue;
    for (int k = 0; i + k <= a.order_; ++k) r[i + k] += a[i] * b[k];
  }
  return r;
}

UnivariateSeries operator*(const Rational& c, const UnivariateSeries& a) {
  UnivariateSeries r(a.order_);
  for (int k = 0; k <= a.order_; ++k) r[k] = c * a[k];
  return r;
}

UnivariateSeries operator/(const UnivariateSeries& a, const UnivariateSeries& b) { return a * b.inverse(); }

UnivariateSeries UnivariateSeries::inverse() const {
  if ((*this)[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  UnivariateSeries r(order_);
  const Rational inv0 = 1 / (*this)[0];
  r[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += (*this)[k] * r[n - k];
    r[n] = -acc * inv0;
  }
  return r;
}

UnivariateSeries UnivariateSeries::sqrt() const {
  if ((*this)[0] != 1) throw std::domain_error("series square root needs constant term 1");
  // r^2 = s: 2 r_0 r_n = s_n - sum_{0<i<n} r_i r_{n-i}, with r_0 = 1.
  UnivariateSeries r(order_);
  r[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    Rational acc = (*this)[n];
    for (int i = 1; i < n; ++i) acc -= r[i] * r[n - i];
    r[n] = acc / 2;
  }
  return r;
}

UnivariateSeries UnivariateSeries::divide_by_x_power(int k) const {
  if (k < 0 || k > order_) throw std::invalid_argument("cannot divide by x^" + std::to_string(k));
  for (int i = 0; i < k; ++i) {
    if ((*this)[i] != 0) throw std::domain_error("series is not divisible by x^" + std::to_string(k));
  }
  UnivariateSeries r(order_ - k);
  for (int i = 0; i <= order_ - k; ++i) r[i] = (*this)[i + k];
  return r;
}

bool UnivariateSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

// --- BivariateSeries --------------------------------------------------------

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  rows_.assign(static_cast<std::size_t>(order) + 1, {});
}

BivariateSeries BivariateSeries::constant(int order, const Rational& c) {
  BivariateSeries s(order);
  s.set(0, 0, c);
  return s;
}

BivariateSeries BivariateSeries::x(int order) {
  BivariateSeries s(order);
  if (order >= 1) s.set(1, 0, 1);
  return s;
}

BivariateSeries BivariateSeries::y(int order) {
  BivariateSeries s(order);
  s.set(0, 1, 1);
  return s;
}

Rational BivariateSeries::coefficient(int n, int m) const {
  if (n < 0 || n > order_) throw std::out_of_range("x power " + std::to_string(n) + " beyond truncation order");
  const auto& r = rows_[static_cast<std::size_t>(n)];
  if (m < 0 || static_cast<std::size_t>(m) >= r.size()) return 0;
  return r[static_cast<std::size_t>(m)];
}

BigInt BivariateSeries::integer_coefficient(int n, int m) const {
  return to_integer(coefficient(n, m), "coefficient of x^" + std::to_string(n) + " y^" + std::to_string(m));
}

void BivariateSeries::set(int n, int m, const Rational& value) {
  if (n < 0 || n > order_ || m < 0) throw std::out_of_range("coefficient index out of range");
  auto& r = rows_[static_cast<std::size_t>(n)];
  if (static_cast<std::size_t>(m) >= r.size()) r.resize(static_cast<std::size_t>(m) + 1);
  r[static_cast<std::size_t>(m)] = value;
  poly_trim(r);
}

int BivariateSeries::y_degree(int n) const { return static_cast<int>(row(n).size()) - 1; }

std::map<std::pair<int, int>, BigInt> BivariateSeries::integer_coefficients() const {
  std::map<std::pair<int, int>, BigInt> out;
  for (int n = 0; n <= order_; ++n) {
    const auto& r = row(n);
    for (std::size_t m = 0; m < r.size(); ++m) {
      if (r[m] != 0) out[{n, static_cast<int>(m)}] = integer_coefficient(n, static_cast<int>(m));
    }
  }
  return out;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  require_same_order(a.order_, b.order_);
  BivariateSeries r = a;
  for (int n = 0; n <= a.order_; ++n) poly_add_into(r.rows_[static_cast<std::size_t>(n)], b.row(n), +1);
  r.trim();
  return r;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  require_same_order(a.order_, b.order_);
  BivariateSeries r = a;
  for (int n = 0; n <= a.order_; ++n) poly_add_into(r.rows_[static_cast<std::size_t>(n)], b.row(n), -1);
  r.trim();
  return r;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  require_same_order(a.order_, b.order_);
  BivariateSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.row(i).empty()) continue;
    for (int k = 0; i + k <= a.order_; ++k) {
      if (b.row(k).empty()) continue;
      poly_add_into(r.rows_[static_cast<std::size_t>(i + k)], poly_mul(a.row(i), b.row(k)), +1);
    }
  }
  r.trim();
  return r;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  return a.order_ == b.order_ && a.rows_ == b.rows_;
}

BivariateSeries BivariateSeries::inverse() const {
  const auto& r0 = row(0);
  if (r0.size() != 1 || r0[0] == 0) {
    throw std::domain_error("bivariate inverse needs a nonzero constant x^0 row");
  }
  const Rational inv0 = 1 / r0[0];
  BivariateSeries r(order_);
  r.rows_[0] = {inv0};
  for (int n = 1; n <= order_; ++n) {
    std::vector<Rational> acc;
    for (int k = 1; k <= n; ++k) {
      if (row(k).empty()) continue;
      poly_add_into(acc, poly_mul(row(k), r.row(n - k)), +1);
    }
    for (auto& c : acc) c = -c * inv0;
    poly_trim(acc);
    r.rows_[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return r;
}

bool BivariateSeries::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

void BivariateSeries::trim() {
  for (auto& r : rows_) poly_trim(r);
}

}  // namespace pam
