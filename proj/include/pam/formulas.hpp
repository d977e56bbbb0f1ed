#pragma once

#include "pam/bigint.hpp"
#include "pam/series.hpp"

namespace pam {

/// C_{n,k} = binom(kn, n) / ((k-1)n + 1).
BigInt catalan_k(int n, int k);

/// Number of 12312-avoiding matchings on [2n] with exactly m crossings, by
/// the closed alternating sum over i = n .. 2n-1.
BigInt crossing_refined_12312(int n, int m);

/// Coefficient of x^n y^m in
///   1 + sum_{i>=1} (1/i) sum_{j=0}^{i} binom(i,j) binom(3j, i+1+j) x^j (y-1)^{i-j},
/// expanding each (y-1)^{i-j} with signed binomials.
BigInt closed_G_coeff(int n, int m);

/// Solves x G^3 + G - G^2 + y (G-1)^2 = 0 with G = 1 + O(x) by iterating
/// G <- 1 + (x G^3 + y (G-1)^2) / G. Each pass fixes one more x-order.
BivariateSeries solve_G(int order);

/// B = (G - 1) / G.
BivariateSeries solve_B(int order);

/// Residual G - 1 - x G^2 / (1 - y B).
BivariateSeries residual_G_B(const BivariateSeries& G, const BivariateSeries& B);
/// Residual B - x G / (1 - y B).
BivariateSeries residual_B(const BivariateSeries& G, const BivariateSeries& B);
/// Residual B G - (G - 1).
BivariateSeries residual_B_quotient(const BivariateSeries& G, const BivariateSeries& B);
/// Residual x G^3 + G - G^2 + y (G-1)^2.
BivariateSeries residual_G_cubic(const BivariateSeries& G);

/// F <- 1 + x F^2 / (1 - x F) to a fixed point: generating function of
/// matchings avoiding both 12312 and 121323.
UnivariateSeries solve_F(int order);

/// Expansion of (1 + x - sqrt(1 - 6x + x^2)) / (4x) to the given order.
UnivariateSeries sqrt_form_F(int order);

/// f_0 = 1, f_n = (1/n) sum_{j=1}^{n} 2^{j-1} binom(n,j) binom(n,j-1).
BigInt closed_f(int n);

/// N(n, k) = (1/n) binom(n,k) binom(n,k+1).
BigInt narayana(int n, int k);

/// Double-avoiders on [2n] with exactly m crossings:
/// (1/n) binom(n,m) binom(2n-m, n+1).
BigInt refined_double(int n, int m);

/// Left-hand side of the Catalan identity,
/// sum_{i=n}^{2n-1} ((-1)^{n+i} / i) binom(i,n) binom(3n, i+1+n).
BigInt corollary_lhs(int n);

/// corollary_lhs(n) == binom(2n,n)/(n+1).
bool corollary_identity_check(int n);

}  // namespace pam
