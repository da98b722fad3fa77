#pragma once

#include "betaram/constants.hpp"

namespace betaram {

/// Order of a polygamma function; n = 0 is psi itself.
struct PolygammaOrder {
  int n = 0;
};

/// Highest polygamma order the asymptotic path supports.
inline constexpr int kMaxPolygammaOrder = 40;

// Gamma family. All arguments must be finite and > 0; anything else throws
// DomainError (no reflection).
double ln_gamma(double x);
double psi(double x);
double polygamma(PolygammaOrder order, double x);

// Zeta family. s must exceed 1.
double zeta(double s);
/// zeta(s) - 1 without cancellation for large s.
double zeta_minus_one(double s);
/// Hurwitz zeta sum_{k>=0} (k+a)^{-s}, s > 1, a > 0.
double hurwitz_zeta(double s, double a);

/// lambda(n) = sum over odd k of k^{-n}, n >= 2.
double dirichlet_lambda(int n);
/// lambda(n) - 1, accurate for large n.
double dirichlet_lambda_excess(int n);
/// beta(2n+1) = sum (-1)^k (2k+1)^{-(2n+1)}, n >= 0.
double dirichlet_beta_odd(int n);
/// 1 - beta(2n+1), accurate for large n.
double dirichlet_beta_odd_complement(int n);

// Exact tables. Range is 0..2K (Euler) and 0..2K+1 (Bernoulli).
/// Euler number E_n; returns 0 for odd n.
BigInt euler_number(int n);
BigRational bernoulli_number(int n);
double bernoulli_number_value(int n);
/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
double bernoulli_polynomial(int n, double x);

/// W_n = (2n-1)!!/(2n)!!.
double wallis_ratio(long n);
/// Rising factorial (a)_n.
double pochhammer(double a, int n);
/// Gauss value F(a,b;c;1) = G(c)G(c-a-b)/(G(c-a)G(c-b)); all gamma
/// arguments must be positive.
double gauss_value_2f1(double a, double b, double c);

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);
double factorial(int n);

}  // namespace betaram
