#include "betaram/functions.hpp"

#include "betaram/constants.hpp"
#include "betaram/errors.hpp"
#include "betaram/kernels.hpp"
#include "betaram/series.hpp"
#include "betaram/summation.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace betaram {
namespace {

using std::numbers::ln2;
using std::numbers::pi;

void require_positive(const char* where, double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    detail::throw_domain(where, "argument must be finite and > 0, got " + std::to_string(x));
  }
}

void require_order(const char* where, int order, int max_order) {
  if (order < 0 || order > max_order) {
    detail::throw_range(where, "derivative order must be in 0.." + std::to_string(max_order));
  }
}

double pg(int n, double x) { return polygamma(PolygammaOrder{n}, x); }

// a(a-1)...(a-m+1)
double falling(double a, int m) {
  double f = 1.0;
  for (int i = 0; i < m; ++i) f *= a - i;
  return f;
}

// Below this point G(x)/x and D(x) come from their Taylor series.
constexpr double kH2SeriesCut = 0.1;
constexpr double kDSeriesCut = 0.5;
constexpr double kRTildeSeriesCut = 0.5;

// G(x)/x with G = 3 psi(x+1) + gamma - 2 psi(2x+1) = sum_{k>=1} g_k x^k,
// g_k = (-1)^{k+1} (3 - 2^{k+1}) zeta(k+1); order-th derivative.
double g_over_x(double x, int order) {
  if (x < kH2SeriesCut) {
    CompensatedSum<> sum;
    for (int k = 1; k <= 60; ++k) {
      const int p = k - 1;
      if (p < order) continue;
      const double gk = ((k % 2 == 1) ? 1.0 : -1.0) * (3.0 - std::ldexp(1.0, k + 1)) * zeta(k + 1.0);
      const double term = gk * falling(p, order) * std::pow(x, p - order);
      sum.add(term);
      if (std::abs(term) < 1e-18 * std::abs(sum.value()) && k > order + 4) break;
    }
    return sum.value();
  }
  // Quotient rule on G/x.
  const double g0 = 3.0 * psi(x + 1.0) + euler_gamma - 2.0 * psi(2.0 * x + 1.0);
  if (order == 0) return g0 / x;
  const double g1 = 3.0 * pg(1, x + 1.0) - 4.0 * pg(1, 2.0 * x + 1.0);
  if (order == 1) return g1 / x - g0 / (x * x);
  const double g2 = 3.0 * pg(2, x + 1.0) - 8.0 * pg(2, 2.0 * x + 1.0);
  return g2 / x - 2.0 * g1 / (x * x) + 2.0 * g0 / (x * x * x);
}

// h2 = 2 P0 Delta + G/x + P1, with P_j = psi^{(j)}(x+1) (P0 shifted by gamma)
// and Delta = psi(2x+1) - psi(x+1); both free of 1/x singularities.
double h2_chain(double x, int order) {
  const double p0 = psi(x + 1.0) + euler_gamma;
  const double p1 = pg(1, x + 1.0);
  const double p2 = pg(2, x + 1.0);
  const double d0 = psi(2.0 * x + 1.0) - psi(x + 1.0);
  const double d1 = 2.0 * pg(1, 2.0 * x + 1.0) - p1;
  switch (order) {
    case 0: return 2.0 * p0 * d0 + g_over_x(x, 0) + p1;
    case 1: return 2.0 * (p1 * d0 + p0 * d1) + g_over_x(x, 1) + p2;
    default: {
      const double p3 = pg(3, x + 1.0);
      const double d2 = 4.0 * pg(2, 2.0 * x + 1.0) - p2;
      return 2.0 * (p2 * d0 + 2.0 * p1 * d1 + p0 * d2) + g_over_x(x, 2) + p3;
    }
  }
}

double h1_chain(double x, int order) {
  const double d0 = psi(2.0 * x + 1.0) - psi(x + 1.0);
  if (order == 0) return x * d0 + 1.5;
  const double d1 = 2.0 * pg(1, 2.0 * x + 1.0) - pg(1, x + 1.0);
  return d0 + x * d1;
}

double h3_value(double x) {
  const double u = 2.0 * x + 1.0;
  const double a = x + 0.5;
  const double b = x + 1.0;
  const double pb = psi(b) + euler_gamma;
  return 2.0 * (psi(a) + euler_gamma + 2.0 * ln2) - 2.0 * x * pg(1, a) + x * x * pg(2, a) -
         4.0 * (((4.0 * x + 12.0) * x + 6.0) * x + 1.0) / (u * u * u) * pb +
         4.0 * x * ((2.0 * x + 4.0) * x + 1.0) / (u * u) * pg(1, b) - 2.0 * x * x * (x + 1.0) / u * pg(2, b);
}

double h4_value(double x) {
  const double u = 2.0 * x + 1.0;
  const double b = x + 1.0;
  const double u2 = u * u;
  return u2 * u2 * pg(3, x + 0.5) + 48.0 * (psi(b) + euler_gamma) - 24.0 * u * pg(1, b) + 6.0 * u2 * pg(2, b) -
         2.0 * b * u2 * u * pg(3, b);
}

double h5_value(double x) {
  const double u = 2.0 * x + 1.0;
  const double a = x + 0.5;
  const double b = x + 1.0;
  return 8.0 / u * (pg(3, a) - pg(3, b)) + pg(4, a) - 2.0 * b / u * pg(4, b);
}

double h5_derivative(double x) {
  const double u = 2.0 * x + 1.0;
  const double a = x + 0.5;
  const double b = x + 1.0;
  return -16.0 / (u * u) * (pg(3, a) - pg(3, b)) + 8.0 / u * (pg(4, a) - pg(4, b)) + pg(5, a) +
         2.0 / (u * u) * pg(4, b) - 2.0 * b / u * pg(5, b);
}

double h6_value(double x) {
  const double b = x + 1.0;
  const double b2 = b * b;
  return 8.0 * pg(3, b) + pg(4, b) - 8.0 * pg(3, x + 1.5) - 24.0 * (2.0 * x + 1.0) / (b2 * b2 * b);
}

double h6_derivative(double x) {
  const double b = x + 1.0;
  const double b3 = b * b * b;
  return 8.0 * pg(4, b) + pg(5, b) - 8.0 * pg(4, x + 1.5) + 24.0 * (8.0 * x + 3.0) / (b3 * b3);
}

// D(x) = 2 sum_j [a_{j+3} - (-1)^j zeta(j+3)] x^j near 0.
double d_series(double x, int order) {
  CompensatedSum<> sum;
  for (int j = order; j <= 80; ++j) {
    const double c = b_power_coeff_recurrence(j + 3) - ((j % 2 == 0) ? 1.0 : -1.0) * zeta(j + 3.0);
    sum.add(2.0 * c * falling(j, order) * std::pow(x, j - order));
  }
  return sum.value();
}

// psi(n+x) + gamma = sum_j c_j x^j, c_0 = psi(n) + gamma,
// c_j = (-1)^{j+1} zeta(j+1, n).
double shifted_psi_coeff(int n, int j) {
  if (j == 0) return psi(static_cast<double>(n)) + euler_gamma;
  return ((j % 2 == 1) ? 1.0 : -1.0) * hurwitz_zeta(j + 1.0, static_cast<double>(n));
}

// m-th derivative of -2 (psi(n+x)+gamma) x^{-theta} from the Taylor series.
double r_tilde_series(ThetaShiftParams p, double x, int m) {
  CompensatedSum<> sum;
  for (int j = 0; j <= 400; ++j) {
    const double e = j - p.theta;
    const double f = falling(e, m);
    if (f == 0.0) continue;
    const double term = shifted_psi_coeff(p.n, j) * f * std::pow(x, e - m);
    sum.add(term);
    if (j > m + 4 && std::abs(term) < 1e-18 * std::abs(sum.value())) break;
  }
  return -2.0 * sum.value();
}

}  // namespace

double big_b(double x) {
  require_positive("big_b", x);
  // 2^{1-2x} sqrt(pi) G(x)/G(x+1/2), the ratio shifted up to z >= 12 where
  // ln(G(z+1)/G(z+1/2)) has a short asymptotic series.
  double z = x;
  double prod = 1.0;
  while (z < 12.0) {
    prod *= (z + 0.5) / z;
    z += 1.0;
  }
  const double ratio = std::exp(lnb_asymptotic(z, 8, AsymptoticVariant::classic)) / z * prod;
  return std::exp2(1.0 - 2.0 * x) * std::sqrt(std::numbers::pi) * ratio;
}

double big_r(double x) {
  require_positive("big_r", x);
  return -2.0 * psi(x) - 2.0 * euler_gamma;
}

double reciprocal_big_b(double x) {
  require_positive("reciprocal_big_b", x);
  return 1.0 / big_b(x);
}

double b_ell_derivative(double x, DerivativeOrder n) {
  require_positive("b_ell_derivative", x);
  require_order("b_ell_derivative", n.m, kMaxDerivativeOrder);
  if (n.m == 0) {
    if (x <= 0.125) {
      CompensatedSum<> sum;
      for (int k = 2; k <= 80; ++k) {
        const double term = lnb_series_coeff(k) * std::pow(x, k);
        sum.add(term);
        if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
      }
      return sum.value();
    }
    return 2.0 * ln_gamma(x + 1.0) - ln_gamma(2.0 * x + 1.0);
  }
  const int k = n.m - 1;
  return 2.0 * pg(k, x + 1.0) - std::ldexp(pg(k, 2.0 * x + 1.0), n.m);
}

double r_over_b(double x, int order) {
  require_positive("r_over_b", x);
  require_order("r_over_b", order, 2);
  const double inv_b = reciprocal_big_b(x);
  switch (order) {
    case 0: return big_r(x) * inv_b;
    case 1: return -2.0 * inv_b * h2_chain(x, 0);
    default: {
      const double dpsi = psi(2.0 * x + 1.0) - psi(x + 1.0) + 0.5 / x;
      const double inv_b_prime = 2.0 * inv_b * dpsi;
      return -2.0 * inv_b_prime * h2_chain(x, 0) - 2.0 * inv_b * h2_chain(x, 1);
    }
  }
}

double d_func(double x, int order) {
  require_positive("d_func", x);
  require_order("d_func", order, 1);
  if (x < kDSeriesCut) return d_series(x, order);
  const double b = big_b(x);
  const double r = big_r(x);
  const double x2 = x * x;
  if (order == 0) return (b - r) / x2;
  const double bp = 2.0 * b * (psi(x) - psi(2.0 * x));
  const double rp = -2.0 * pg(1, x);
  return (bp - rp) / x2 - 2.0 * (b - r) / (x2 * x);
}

double r_tilde_theta_n(ThetaShiftParams params, double x) {
  require_positive("r_tilde_theta_n", x);
  if (!(params.theta >= 1.0) || params.n < 1) {
    detail::throw_domain("r_tilde_theta_n", "requires theta >= 1 and n >= 1");
  }
  if (x < kRTildeSeriesCut) return r_tilde_series(params, x, 0);
  return -2.0 * (psi(params.n + x) + euler_gamma) / std::pow(x, params.theta);
}

double r_tilde_signed_derivative(ThetaShiftParams params, double x, DerivativeOrder m) {
  require_positive("r_tilde_signed_derivative", x);
  if (!(params.theta >= 1.0) || params.n < 1) {
    detail::throw_domain("r_tilde_signed_derivative", "requires theta >= 1 and n >= 1");
  }
  if (m.m < 1 || m.m > kMaxDerivativeOrder) {
    detail::throw_range("r_tilde_signed_derivative", "order must be in 1..8");
  }
  const double sign = (m.m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
  if (x < kRTildeSeriesCut) return sign * r_tilde_series(params, x, m.m);

  // (-1)^{m-1} R~^{(m)} = 2 x^{-theta-m} [(theta)_m (psi(n+x)+gamma)
  //   - sum_k C(m,k) (theta)_{m-k} x^k psi_k(n+x)],  psi_k = (-1)^{k-1} psi^{(k)}.
  const double y = params.n + x;
  CompensatedSum<> r;
  r.add(pochhammer(params.theta, m.m) * (psi(y) + euler_gamma));
  for (int k = 1; k <= m.m; ++k) {
    const double psik = ((k % 2 == 1) ? 1.0 : -1.0) * pg(k, y);
    r.add(-binomial(m.m, k) * pochhammer(params.theta, m.m - k) * std::pow(x, k) * psik);
  }
  return 2.0 * r.value() / std::pow(x, params.theta + m.m);
}

double h_aux(int k, double x) { return h_aux_derivative(k, x, 0); }

double h_aux_derivative(int k, double x, int order) {
  require_positive("h_aux", x);
  switch (k) {
    case 1: require_order("h_aux(1)", order, 1); return h1_chain(x, order);
    case 2: require_order("h_aux(2)", order, 2); return h2_chain(x, order);
    case 3: {
      require_order("h_aux(3)", order, 1);
      if (order == 0) return h3_value(x);
      const double u = 2.0 * x + 1.0;
      return x * x * h4_value(x) / (u * u * u * u);
    }
    case 4: {
      require_order("h_aux(4)", order, 1);
      if (order == 0) return h4_value(x);
      const double u2 = (2.0 * x + 1.0) * (2.0 * x + 1.0);
      return u2 * u2 * h5_value(x);
    }
    case 5: require_order("h_aux(5)", order, 1); return order == 0 ? h5_value(x) : h5_derivative(x);
    case 6: require_order("h_aux(6)", order, 1); return order == 0 ? h6_value(x) : h6_derivative(x);
    default: detail::throw_range("h_aux", "index must be in 1..6");
  }
}

double h2_second_derivative_pq(double x) {
  require_positive("h2_second_derivative_pq", x);
  const double p0 = psi(x + 1.0) + euler_gamma;
  const double p1 = pg(1, x + 1.0);
  const double p2 = pg(2, x + 1.0);
  const double q0 = 0.5 * (psi(x + 1.0) - psi(x + 0.5));
  const double q1 = 0.5 * (pg(1, x + 1.0) - pg(1, x + 0.5));
  const double q2 = 0.5 * (pg(2, x + 1.0) - pg(2, x + 0.5));
  const double x2 = x * x;
  const double x3 = x2 * x;
  return 2.0 * (p0 - 1.0 / x) * (1.0 / x3 - q2) + 2.0 * (p2 - 2.0 / x3) * (ln2 + 0.5 / x - q0) +
         4.0 * (p1 + 1.0 / x2) * (-q1 - 0.5 / x2) + pg(3, x);
}

double h6_difference(double x) {
  if (!std::isfinite(x) || x < 0.0) detail::throw_domain("h6_difference", "requires x >= 0");
  const double num = 24.0 * ((((80.0 * x + 560.0) * x + 1480.0) * x + 1750.0) * x + 781.0);
  const double u = 2.0 * x + 3.0;
  const double v = x + 2.0;
  const double u2 = u * u;
  const double v2 = v * v;
  return num / (u2 * u2 * v2 * v2 * v);
}

namespace {
void require_unit(const char* where, double x) {
  if (!(x > 0.0 && x < 1.0)) detail::throw_domain(where, "requires 0 < x < 1, got " + std::to_string(x));
}

// sum_n coef(n) (1-2x)^{2n} until the terms are negligible.
template <typename Coef>
double even_series(const char* where, double x, Coef coef) {
  const double r2 = (1.0 - 2.0 * x) * (1.0 - 2.0 * x);
  CompensatedSum<> sum;
  double power = 1.0;
  for (int n = 0; n <= 200000; ++n) {
    const double term = coef(n) * power;
    sum.add(term);
    if (n > 0 && std::abs(term) < 1e-17 * std::abs(sum.value())) return sum.value();
    power *= r2;
  }
  detail::throw_range(where, "series did not converge; x too close to an endpoint");
}
}  // namespace

double boundary_r(double x) {
  require_unit("boundary_r", x);
  return -psi(x) - psi(1.0 - x) - 2.0 * euler_gamma;
}

double boundary_b(double x) {
  require_unit("boundary_b", x);
  return std::exp(ln_gamma(x) + ln_gamma(1.0 - x));
}

double boundary_r_series(double x) {
  require_unit("boundary_r_series", x);
  // ln 16 + sum_{n>=1} 4 lambda(2n+1) (2t)^{2n}
  return even_series("boundary_r_series", x, [](int n) {
    if (n == 0) return 4.0 * std::numbers::ln2;
    const double excess = n <= 60 ? dirichlet_lambda_excess(2 * n + 1) : 0.0;
    return 4.0 * (1.0 + excess);
  });
}

double boundary_b_series(double x) {
  require_unit("boundary_b_series", x);
  // sum_{n>=0} 4 beta(2n+1) (2t)^{2n}
  return even_series("boundary_b_series", x, [](int n) {
    const double complement = n <= 60 ? dirichlet_beta_odd_complement(n) : 0.0;
    return 4.0 * (1.0 - complement);
  });
}

double conjecture_f(double x) {
  if (!(x > 0.0 && x < 0.5)) detail::throw_domain("conjecture_f", "requires 0 < x < 1/2");
  return boundary_r(x) - boundary_b(x) / (1.0 + x * (1.0 - x));
}

}  // namespace betaram
