#include "betaram/kernels.hpp"

#include "betaram/errors.hpp"
#include "betaram/summation.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace betaram {
namespace {

using std::numbers::pi;

// Asymptotic series use B_2..B_20.
constexpr int kAsymptoticTerms = 10;
constexpr double kShiftThreshold = 12.0;
constexpr int kZetaDirectTerms = 20;

void require_positive(const char* where, double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    detail::throw_domain(where, "argument must be finite and > 0, got " + std::to_string(x));
  }
}

const std::vector<double>& b2k() { return constant_table().bernoulli_even_double; }

// sum_{k=1}^{10} B_{2k} / (2k (2k-1) z^{2k-1})
double stirling_correction(double z) {
  const auto& b = b2k();
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double acc = 0.0;
  for (int k = kAsymptoticTerms; k >= 1; --k) {
    acc = acc * inv2 + b[static_cast<std::size_t>(k)] / (2.0 * k * (2.0 * k - 1.0));
  }
  return acc * inv;
}

}  // namespace

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return std::round(c);
}

double ln_gamma(double x) {
  require_positive("ln_gamma", x);
  // The main term and the shift cancel for small x; both run in long double.
  long double z = x;
  long double shift = 0.0L;
  if (z < kShiftThreshold) {
    // ln G(x) = ln G(x+n) - ln(x (x+1) ... (x+n-1))
    long double prod = 1.0L;
    while (z < kShiftThreshold) {
      prod *= z;
      z += 1.0L;
    }
    shift = std::log(prod);
  }
  const long double main = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  return static_cast<double>(main + stirling_correction(static_cast<double>(z)) - shift);
}

double psi(double x) {
  require_positive("psi", x);
  double z = x;
  CompensatedSum<> shift;
  while (z < kShiftThreshold) {
    shift.add(1.0 / z);
    z += 1.0;
  }
  const auto& b = b2k();
  const double inv2 = 1.0 / (z * z);
  double tail = 0.0;
  for (int k = kAsymptoticTerms; k >= 1; --k) {
    tail = tail * inv2 + b[static_cast<std::size_t>(k)] / (2.0 * k);
  }
  tail *= inv2;
  return std::log(z) - 0.5 / z - tail - shift.value();
}

double polygamma(PolygammaOrder order, double x) {
  const int n = order.n;
  if (n == 0) return psi(x);
  if (n < 0 || n > kMaxPolygammaOrder) {
    detail::throw_range("polygamma", "order must be in 0.." + std::to_string(kMaxPolygammaOrder));
  }
  require_positive("polygamma", x);

  // Shift up so that the asymptotic series is accurate for this order.
  const double threshold = kShiftThreshold + 2.0 * n;
  int steps = 0;
  if (x < threshold) steps = static_cast<int>(std::ceil(threshold - x));
  const double z = x + steps;

  // |psi^(n)(z)| ~ (n-1)!/z^n + n!/(2 z^{n+1}) + sum B_{2k} (2k+n-1)!/((2k)! z^{2k+n})
  const auto& b = b2k();
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (int k = kAsymptoticTerms; k >= 1; --k) {
    // (2k+n-1)!/((2k)! (n-1)!)
    double ratio = 1.0;
    for (int j = 1; j <= 2 * k; ++j) ratio *= static_cast<double>(n - 1 + j) / j;
    series = series * inv2 + b[static_cast<std::size_t>(k)] * ratio;
  }
  series *= inv2;
  const double lead = factorial(n - 1) * std::pow(inv, n);
  const double asym = lead * (1.0 + 0.5 * n * inv + series);

  // Largest shift terms are the small-k ones; accumulate from the tail.
  CompensatedSum<> shifted;
  for (int k = steps - 1; k >= 0; --k) shifted.add(std::pow(x + k, -(n + 1)));
  const double magnitude = asym + factorial(n) * shifted.value();
  return (n % 2 == 1) ? magnitude : -magnitude;
}

double hurwitz_zeta(double s, double a) {
  if (!std::isfinite(s) || !(s > 1.0)) {
    detail::throw_domain("hurwitz_zeta", "s must be > 1, got " + std::to_string(s));
  }
  require_positive("hurwitz_zeta", a);

  // Euler-Maclaurin: sum_{k<N} (k+a)^{-s} + (a+N)^{1-s}/(s-1) + (a+N)^{-s}/2
  //   + sum_{j=1}^{10} B_{2j}/(2j)! (s)_{2j-1} (a+N)^{-s-2j+1}.
  // Remainder is bounded by the first omitted (j = 11) term.
  const double big_n = a + kZetaDirectTerms;
  const double base = std::pow(big_n, -s);
  const auto& b = b2k();
  double correction = 0.0;
  double rising = s;       // (s)_{2j-1}
  double fact = 2.0;       // (2j)!
  double power = 1.0 / big_n;
  for (int j = 1; j <= kAsymptoticTerms; ++j) {
    correction += b[static_cast<std::size_t>(j)] / fact * rising * power;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    power /= big_n * big_n;
  }
  CompensatedSum<> sum;
  sum.add(base * correction);
  sum.add(0.5 * base);
  sum.add(base * big_n / (s - 1.0));
  for (int k = kZetaDirectTerms - 1; k >= 0; --k) sum.add(std::pow(k + a, -s));
  return sum.value();
}

double zeta(double s) {
  if (!std::isfinite(s) || !(s > 1.0)) {
    detail::throw_domain("zeta", "s must be > 1, got " + std::to_string(s));
  }
  return hurwitz_zeta(s, 1.0);
}

double zeta_minus_one(double s) {
  if (!std::isfinite(s) || !(s > 1.0)) {
    detail::throw_domain("zeta_minus_one", "s must be > 1, got " + std::to_string(s));
  }
  return hurwitz_zeta(s, 2.0);
}

double dirichlet_lambda(int n) {
  if (n < 2) detail::throw_domain("dirichlet_lambda", "n must be >= 2");
  return 1.0 + dirichlet_lambda_excess(n);
}

double dirichlet_lambda_excess(int n) {
  if (n < 2) detail::throw_domain("dirichlet_lambda_excess", "n must be >= 2");
  // sum_{k>=1} (2k+1)^{-n} = 2^{-n} zeta(n, 3/2)
  return std::ldexp(hurwitz_zeta(n, 1.5), -n);
}

double dirichlet_beta_odd(int n) {
  if (n < 0) detail::throw_domain("dirichlet_beta_odd", "n must be >= 0");
  if (n <= kTableK) {
    // (pi/2)^{2n+1} |E_{2n}| / (2 (2n)!)
    const double e = boost::multiprecision::abs(euler_number(2 * n)).convert_to<double>();
    return std::pow(pi / 2.0, 2 * n + 1) * e / (2.0 * factorial(2 * n));
  }
  return 1.0 - dirichlet_beta_odd_complement(n);
}

double dirichlet_beta_odd_complement(int n) {
  if (n < 0) detail::throw_domain("dirichlet_beta_odd_complement", "n must be >= 0");
  if (n == 0) return 1.0 - pi / 4.0;
  // 1 - beta(m) = sum_{j>=1} [(4j-1)^{-m} - (4j+1)^{-m}] = 4^{-m} [zeta(m,3/4) - zeta(m,5/4)]
  const int m = 2 * n + 1;
  const double diff = hurwitz_zeta(m, 0.75) - hurwitz_zeta(m, 1.25);
  return std::ldexp(diff, -2 * m);
}

BigInt euler_number(int n) {
  if (n < 0 || n > 2 * kTableK) {
    detail::throw_range("euler_number", "index must be in 0.." + std::to_string(2 * kTableK));
  }
  if (n % 2 == 1) return 0;
  return constant_table().euler[static_cast<std::size_t>(n)];
}

BigRational bernoulli_number(int n) {
  if (n < 0 || n > 2 * kTableK + 1) {
    detail::throw_range("bernoulli_number", "index must be in 0.." + std::to_string(2 * kTableK + 1));
  }
  return constant_table().bernoulli[static_cast<std::size_t>(n)];
}

double bernoulli_number_value(int n) { return bernoulli_number(n).convert_to<double>(); }

double bernoulli_polynomial(int n, double x) {
  if (n < 0 || n > 2 * kTableK + 1) {
    detail::throw_range("bernoulli_polynomial", "degree must be in 0.." + std::to_string(2 * kTableK + 1));
  }
  // Horner over the coefficients C(n,k) B_k of x^{n-k}.
  const auto& b = constant_table().bernoulli;
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    acc = acc * x + binomial(n, k) * b[static_cast<std::size_t>(k)].convert_to<double>();
  }
  return acc;
}

double wallis_ratio(long n) {
  if (n < 0) detail::throw_domain("wallis_ratio", "n must be >= 0");
  long double w = 1.0L;
  for (long k = 1; k <= n; ++k) {
    w *= static_cast<long double>(2 * k - 1) / static_cast<long double>(2 * k);
  }
  return static_cast<double>(w);
}

double pochhammer(double a, int n) {
  if (n < 0) detail::throw_domain("pochhammer", "n must be >= 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

double gauss_value_2f1(double a, double b, double c) {
  if (!(c > 0.0) || !(c - a > 0.0) || !(c - b > 0.0) || !(c - a - b > 0.0)) {
    detail::throw_domain("gauss_value_2f1", "requires c, c-a, c-b, c-a-b > 0");
  }
  return std::exp(ln_gamma(c) + ln_gamma(c - a - b) - ln_gamma(c - a) - ln_gamma(c - b));
}

}  // namespace betaram
