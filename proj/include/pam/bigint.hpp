#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pam {

using BigInt = mpz_class;
using Rational = mpq_class;

/// binom(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// num/den in canonical form (GMP rationals must be canonical before use).
Rational ratio(const BigInt& num, const BigInt& den);

/// Returns q as an integer, throwing IntegralityError (tagged with `what`)
/// when the denominator is not 1.
BigInt to_integer(const Rational& q, std::string_view what);

std::string to_decimal(const BigInt& v);

}  // namespace pam
