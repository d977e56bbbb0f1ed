#include "pam/bigint.hpp"

#include "pam/errors.hpp"

namespace pam {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt to_integer(const Rational& q, std::string_view what) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() != 1) {
    throw IntegralityError(std::string(what) + " is not integral: " + c.get_str());
  }
  return c.get_num();
}

std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace pam
