#include "wallis_tail.hpp"

#include "betaram/errors.hpp"
#include "betaram/kernels.hpp"
#include "betaram/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace betaram::detail {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();

// |f^{(j)}(a)| for f(n) = (n+c)^{-p} (n+b)^{-q}; every Leibniz term has the
// same sign, so the magnitude is the plain sum.
double abs_derivative(int j, double u, double p, double v, double q) {
  double acc = 0.0;
  for (int i = 0; i <= j; ++i) {
    acc += binomial(j, i) * pochhammer(p, i) * pochhammer(q, j - i) *
           std::pow(u, -p - i) * std::pow(v, -q - (j - i));
  }
  return acc;
}

long required_start(double c, double b) {
  // a + c >= 2|b - c| keeps the integral expansion ratio at most 1/2.
  return static_cast<long>(std::ceil(2.0 * std::abs(b - c) - c)) + 1;
}

}  // namespace

Bracket power_tail_sum(long a, double c, double p, double b, double q) {
  const double big_a = static_cast<double>(a) + c;
  const double e = b - c;
  const double total = p + q;
  if (!(total > 1.0) || !(big_a > 0.0) || !(a + b > 0.0) || 2.0 * std::abs(e) > big_a) {
    throw_domain("power_tail_sum", "parameters outside the certified regime");
  }

  // int_a^inf (y)^{-p} (y+e)^{-q} dy with y = x + c
  //   = sum_k (-e/A)^k (q)_k/k! A^{1-p-q}/(p+q+k-1)
  const double lead = std::pow(big_a, 1.0 - total);
  const double ratio = -e / big_a;
  double coeff = 1.0;  // (-e/A)^k (q)_k / k!
  double integral = 0.0;
  double truncation = 0.0;
  for (int k = 0;; ++k) {
    const double t = coeff * lead / (total + k - 1.0);
    integral += t;
    const double growth = std::abs(ratio) * std::max(1.0, (q + k) / (k + 1.0));
    if (std::abs(t) <= 1e-20 * std::abs(integral) || k == 400) {
      truncation = growth < 1.0 ? std::abs(t) * growth / (1.0 - growth) : std::abs(t) * 1e3;
      break;
    }
    coeff *= ratio * (q + k) / (k + 1.0);
  }

  const double u = big_a;
  const double v = static_cast<double>(a) + b;
  const double f0 = abs_derivative(0, u, p, v, q);
  const double f1 = abs_derivative(1, u, p, v, q);
  const double f3 = abs_derivative(3, u, p, v, q);
  const double f5 = abs_derivative(5, u, p, v, q);

  // Euler-Maclaurin: f' and f''' are negative for completely monotone f.
  const double mid = integral + 0.5 * f0 + f1 / 12.0 - f3 / 720.0;
  // First omitted term bounds the remainder.
  const double remainder = f5 / 30240.0;
  const double rounding = 16.0 * kEps * (std::abs(integral) + f0 + f1 + f3);
  const double rad = remainder + truncation + rounding;
  return {mid - rad, mid + rad};
}

Bracket wallis_weighted_sum(long first, long last, double b, double q) {
  if (!(q > 0.5) || !(b >= 0.0)) throw_domain("wallis_weighted_sum", "requires q > 1/2 and b >= 0");
  last = std::max({last, first, required_start(0.25, b)});
  if (b == 0.0) last = std::max(last, 1L);

  long double w = 1.0L;
  for (long n = 1; n <= first; ++n) w *= static_cast<long double>(2 * n - 1) / static_cast<long double>(2 * n);

  CompensatedSum<long double> head;
  long double allowance = 0.0L;
  for (long n = first + 1; n <= last; ++n) {
    if (n >= 1) w *= static_cast<long double>(2 * n - 1) / static_cast<long double>(2 * n);
    const long double term = w * std::pow(static_cast<long double>(n) + b, -static_cast<long double>(q));
    head.add(term);
    allowance += (2.0L * n + 4.0L) * term;
  }

  // rho_n = W_n sqrt(pi (n + 1/4)) increases strictly to 1, so for n > last
  //   rho_{last+1} / sqrt(pi (n+1/4)) <= W_n < 1 / sqrt(pi (n+1/4)).
  const long n1 = last + 1;
  const long double w1 = w * static_cast<long double>(2 * n1 - 1) / static_cast<long double>(2 * n1);
  const long double rho =
      w1 * std::sqrt(std::numbers::pi_v<long double> * (static_cast<long double>(n1) + 0.25L)) -
      4.0L * static_cast<long double>(n1) * kEpsLd;
  const Bracket s = power_tail_sum(n1, 0.25, 0.5, b, q);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const double tail_lo = static_cast<double>(rho) * s.lo * inv_sqrt_pi * (1.0 - 4.0 * kEps);
  const double tail_hi = s.hi * inv_sqrt_pi * (1.0 + 4.0 * kEps);

  const long double h = head.value();
  const double slack = static_cast<double>(allowance * kEpsLd) + 2.0 * kEps * static_cast<double>(h);
  const double hd = static_cast<double>(h);
  return {hd + tail_lo - slack, hd + tail_hi + slack};
}

Bracket pochhammer_weighted_sum(long first, long last, double x) {
  if (!(x > 0.0 && x < 1.0)) throw_domain("pochhammer_weighted_sum", "requires 0 < x < 1");
  const double sigma = 0.5 * (1.0 - x);
  last = std::max({last, first, required_start(sigma, x + 1.0)});

  long double c = 1.0L;
  for (long n = 1; n <= first; ++n) c *= (static_cast<long double>(n) - x) / static_cast<long double>(n);

  CompensatedSum<long double> head;
  long double allowance = 0.0L;
  for (long n = first + 1; n <= last; ++n) {
    if (n >= 1) c *= (static_cast<long double>(n) - x) / static_cast<long double>(n);
    const long double term = c / (static_cast<long double>(n) + x + 1.0L);
    head.add(term);
    allowance += (2.0L * n + 4.0L) * term;
  }

  // r_n = c_n G(1-x) (n + (1-x)/2)^x increases to 1 (Kershaw's bound gives
  // r_n < 1), hence for n > last
  //   r_{last+1} (n+sigma)^{-x} / G(1-x) <= c_n < (n+sigma)^{-x} / G(1-x).
  const long n1 = last + 1;
  const long double c1 = c * (static_cast<long double>(n1) - x) / static_cast<long double>(n1);
  const long double r_over_gamma =
      c1 * std::pow(static_cast<long double>(n1) + sigma, static_cast<long double>(x)) *
      (1.0L - 4.0L * static_cast<long double>(n1) * kEpsLd);
  const double gamma_1mx = std::exp(ln_gamma(1.0 - x));
  const Bracket s = power_tail_sum(n1, sigma, x, x + 1.0, 1.0);
  const double tail_lo = static_cast<double>(r_over_gamma) * s.lo * (1.0 - 4.0 * kEps);
  const double tail_hi = s.hi / gamma_1mx * (1.0 + 1e-13);

  const long double h = head.value();
  const double slack = static_cast<double>(allowance * kEpsLd) + 2.0 * kEps * static_cast<double>(h);
  const double hd = static_cast<double>(h);
  return {hd + tail_lo - slack, hd + tail_hi + slack};
}

}  // namespace betaram::detail
