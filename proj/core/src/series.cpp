#include "betaram/series.hpp"

#include "betaram/constants.hpp"
#include "betaram/errors.hpp"
#include "betaram/functions.hpp"
#include "betaram/kernels.hpp"
#include "betaram/summation.hpp"
#include "wallis_tail.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

namespace betaram {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLn4 = 2.0 * std::numbers::ln2;

// Accuracy of every cached H(m).
constexpr double kHsCacheEps = 1e-13;

void require_unit_open(const char* where, double x) {
  if (!(x > 0.0 && x < 1.0)) detail::throw_domain(where, "requires 0 < x < 1, got " + std::to_string(x));
}

Enclosure from_bracket(detail::Bracket b, double scale = 1.0) {
  return {0.5 * (b.lo + b.hi) * scale, 0.5 * (b.hi - b.lo) * scale};
}

}  // namespace

namespace detail {

Enclosure adaptive_enclosure(const char* where, long start, double eps, long limit,
                             const std::function<Enclosure(long)>& sum) {
  double previous = std::numeric_limits<double>::infinity();
  for (long n = start;; n *= 4) {
    const Enclosure e = sum(n);
    if (e.rad <= eps) return e;
    // Radius stuck at the rounding floor: more terms cannot help. (Small N
    // may be raised internally, so stalls only count once N is large.)
    if (n > limit / 4 || (n >= (1L << 20) && e.rad > 0.5 * previous)) {
      throw ResourceError(std::string(where) + ": accuracy " + std::to_string(eps) +
                          " not reachable (radius " + std::to_string(e.rad) + " at " + std::to_string(n) +
                          " terms)");
    }
    previous = e.rad;
  }
}

}  // namespace detail

namespace {

template <typename Sum>
Enclosure adaptive(const char* where, long start, double eps, long limit, Sum sum) {
  return detail::adaptive_enclosure(where, start, eps, limit, sum);
}

double falling(double a, int m) {
  double f = 1.0;
  for (int i = 0; i < m; ++i) f *= a - i;
  return f;
}

}  // namespace

Enclosure SeriesExpansion::evaluate(double x, int n_terms) const {
  if (!in_domain(x)) detail::throw_domain("SeriesExpansion::evaluate", "x outside the validity interval");
  if (n_terms < 0) detail::throw_domain("SeriesExpansion::evaluate", "requires N >= 0");
  CompensatedSum<> sum;
  double abs_sum = 0.0;
  const double h = x - center;
  double p = 1.0;
  for (int k = 0; k <= n_terms; ++k) {
    const double t = coefficient(k) * p;
    sum.add(t);
    abs_sum += std::abs(t);
    p *= h;
  }
  const auto tail = tail_bound ? tail_bound(n_terms, x) : std::nullopt;
  const double rad = tail ? *tail + 4.0 * kEps * abs_sum : std::numeric_limits<double>::infinity();
  return {sum.value(), rad};
}

double lnb_series_coeff(int n) {
  if (n < 2) detail::throw_domain("lnb_series_coeff", "requires n >= 2");
  if (n > 1000) detail::throw_range("lnb_series_coeff", "n must be <= 1000");
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * (std::ldexp(1.0, n) - 2.0) * zeta(n) / n;
}

SeriesExpansion lnb_series() {
  SeriesExpansion s;
  s.center = 0.0;
  s.coefficient = [](int n) { return n < 2 ? 0.0 : lnb_series_coeff(n); };
  s.valid_lo = 0.0;
  s.valid_hi = 0.5;
  // |l_k| <= 2^k zeta(2)/k, so the tail after N is at most
  // zeta(2)/(N+1) (2x)^{N+1}/(1-2x); no bound at x = 1/2.
  s.tail_bound = [](int n, double x) -> std::optional<double> {
    if (!(x < 0.5)) return std::nullopt;
    return std::numbers::pi * std::numbers::pi / 6.0 / (n + 1) * std::pow(2.0 * x, n + 1) / (1.0 - 2.0 * x);
  };
  return s;
}

SeriesExpansion r_regular_series() {
  SeriesExpansion s;
  s.center = 0.0;
  s.coefficient = [](int n) { return n == 0 ? 0.0 : 2.0 * ((n % 2 == 0) ? 1.0 : -1.0) * zeta(n + 1.0); };
  s.valid_lo = 0.0;
  s.valid_hi = std::nextafter(1.0, 0.0);
  // Alternating with decreasing terms for 0 < x < 1: first omitted term.
  s.tail_bound = [](int n, double x) -> std::optional<double> {
    return 2.0 * zeta(n + 2.0) * std::pow(x, n + 1);
  };
  return s;
}

double r_partial_sum(double x, int n_terms) {
  require_unit_open("r_partial_sum", x);
  if (n_terms < 0) detail::throw_domain("r_partial_sum", "requires N >= 0");
  CompensatedSum<> sum;
  sum.add(2.0 / x);
  double p = 1.0;
  for (int k = 1; k <= n_terms; ++k) {
    p *= -x;
    sum.add(2.0 * zeta(k + 1.0) * p);
  }
  return sum.value();
}

Enclosure r_power_series(double x, int n_terms) {
  require_unit_open("r_power_series", x);
  if (n_terms < 1) detail::throw_domain("r_power_series", "requires N >= 1");
  const double mid = r_partial_sum(x, n_terms);
  const double tail = 2.0 * zeta(n_terms + 2.0) * std::pow(x, n_terms + 1);
  const double rounding = 8.0 * kEps * (2.0 / x + 2.0 * zeta(2.0) * x / (1.0 - x));
  return {mid, tail + rounding};
}

Enclosure b_hyper_sum_1(double x, double eps) {
  if (!(x > 0.0) || !std::isfinite(x)) detail::throw_domain("b_hyper_sum_1", "requires x > 0");
  if (!(eps > 0.0)) detail::throw_domain("b_hyper_sum_1", "requires eps > 0");
  const double scale = std::exp2(1.0 - 2.0 * x);
  // W_n < 1/sqrt(pi n) makes the tail after N at most 2/sqrt(pi N); the
  // bracket used here is the sharper monotone-ratio one.
  return adaptive("b_hyper_sum_1", 256, eps, 1'000'000'000L, [&](long n) {
    return from_bracket(detail::wallis_weighted_sum(-1, n, x, 1.0), scale);
  });
}

Enclosure b_hyper_sum_2(double x, double eps) {
  require_unit_open("b_hyper_sum_2", x);
  if (!(eps > 0.0)) detail::throw_domain("b_hyper_sum_2", "requires eps > 0");
  return adaptive("b_hyper_sum_2", 256, eps, 1'000'000'000L, [&](long n) {
    return from_bracket(detail::pochhammer_weighted_sum(-1, n, x), 2.0);
  });
}

double hs_cached(int m) {
  if (m < 1 || m > kHsCacheSize) {
    detail::throw_range("hs_cached", "index must be in 1.." + std::to_string(kHsCacheSize));
  }
  static std::array<std::once_flag, kHsCacheSize + 1> flags;
  static std::array<double, kHsCacheSize + 1> values{};
  std::call_once(flags[static_cast<std::size_t>(m)], [m] {
    const Enclosure e = adaptive("hs_cached", 64, kHsCacheEps, 100'000'000L, [m](long n) {
      return from_bracket(detail::wallis_weighted_sum(0, n, 0.0, m));
    });
    values[static_cast<std::size_t>(m)] = e.mid;
  });
  return values[static_cast<std::size_t>(m)];
}

double b_power_coeff_closed(int k) {
  if (k < 0) detail::throw_domain("b_power_coeff_closed", "requires k >= 0");
  if (k > kHsCacheSize) detail::throw_range("b_power_coeff_closed", "k exceeds the H(m) cache");
  if (k == 0) return 1.0;
  // a_k = (-1)^k [ (ln 4)^k/k! - sum_{j<k} H(k-j) (ln 4)^j/j! ]
  CompensatedSum<> sum;
  double p = 1.0;  // (ln 4)^j / j!
  for (int j = 0; j < k; ++j) {
    sum.add(-hs_cached(k - j) * p);
    p *= kLn4 / (j + 1);
  }
  sum.add(p);
  return (k % 2 == 0 ? 1.0 : -1.0) * sum.value();
}

double b_power_coeff_recurrence(int k) {
  if (k < 0) detail::throw_domain("b_power_coeff_recurrence", "requires k >= 0");
  if (k > kMaxRecurrenceIndex) {
    detail::throw_range("b_power_coeff_recurrence", "k must be <= " + std::to_string(kMaxRecurrenceIndex));
  }
  // Errors in early a_j grow like 2^{n-j} through the recurrence, so it runs
  // with 100 digits and zeta values of the same precision.
  static const std::array<double, kMaxRecurrenceIndex + 1> table = [] {
    using Big = boost::multiprecision::cpp_bin_float_100;
    std::array<Big, kMaxRecurrenceIndex + 1> c;
    for (int j = 2; j <= kMaxRecurrenceIndex; ++j) {
      const Big two_j = boost::multiprecision::ldexp(Big(1), j);
      const Big z = boost::math::zeta(Big(j));
      c[static_cast<std::size_t>(j)] = ((j % 2 == 1) ? 1 : -1) * (two_j - 2) * z;
    }
    std::array<Big, kMaxRecurrenceIndex + 1> a;
    a[0] = 1;
    a[1] = 0;
    for (int n = 2; n <= kMaxRecurrenceIndex; ++n) {
      Big s = 0;
      for (int j = 2; j <= n; ++j) s += c[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j)];
      a[static_cast<std::size_t>(n)] = s / n;
    }
    std::array<double, kMaxRecurrenceIndex + 1> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(a[i]);
    return out;
  }();
  return table[static_cast<std::size_t>(k)];
}

SeriesExpansion b_power_series() {
  SeriesExpansion s;
  s.center = 0.0;
  s.coefficient = [](int k) { return b_power_coeff_closed(k); };
  s.valid_lo = 0.0;
  s.valid_hi = std::nextafter(1.0, 0.0);
  // Both parts of the closed form are nonnegative and at most 4 ln 4, so
  // |a_k| <= 4 ln 4 and the tail after N is 4 ln 4 x^{N+1}/(1-x).
  s.tail_bound = [](int n, double x) -> std::optional<double> {
    return 4.0 * kLn4 * std::pow(x, n + 1) / (1.0 - x);
  };
  return s;
}

Enclosure b_power_series_sum(double x, double eps) {
  require_unit_open("b_power_series_sum", x);
  if (!(eps > 0.0)) detail::throw_domain("b_power_series_sum", "requires eps > 0");
  const double scale = 2.0 / x;
  // Each a_k inherits at most sum_j kHsCacheEps (ln 4)^j/j! <= 4 kHsCacheEps.
  const double coeff_err = scale * 4.0 * kHsCacheEps / (1.0 - x);
  int n = 0;
  double tail = scale * 4.0 * kLn4 * x / (1.0 - x);
  while (tail > 0.5 * eps) {
    if (++n >= kHsCacheSize) {
      throw ResourceError("b_power_series_sum: x too close to 1 for the coefficient cache");
    }
    tail *= x;
  }
  const Enclosure e = b_power_series().evaluate(x, n);
  const double rad = scale * e.rad + coeff_err;
  if (rad > eps) throw ResourceError("b_power_series_sum: eps below the coefficient accuracy");
  return {scale * e.mid, rad};
}

Enclosure remainder_br1(double x, int n) {
  if (!(x > 0.0) || !std::isfinite(x)) detail::throw_domain("remainder_br1", "requires x > 0");
  if (n < 0) detail::throw_domain("remainder_br1", "requires n >= 0");
  return adaptive("remainder_br1", n + 1024L, 1e-12, 100'000'000L, [&](long last) {
    return from_bracket(detail::wallis_weighted_sum(n, last, x, 1.0));
  });
}

Enclosure remainder_br2(double x, int n) {
  require_unit_open("remainder_br2", x);
  if (n < 0) detail::throw_domain("remainder_br2", "requires n >= 0");
  return adaptive("remainder_br2", n + 1024L, 1e-10, 100'000'000L, [&](long last) {
    return from_bracket(detail::pochhammer_weighted_sum(n, last, x), 2.0);
  });
}

Enclosure wallis_tail_lambda(int n) {
  if (n < 0) detail::throw_domain("wallis_tail_lambda", "requires n >= 0");
  return adaptive("wallis_tail_lambda", n + 1024L, 1e-12, 100'000'000L, [&](long last) {
    return from_bracket(detail::wallis_weighted_sum(std::max(n, 0), last, 0.0, 1.0));
  });
}

double remainder_rrn(double x, int n) {
  if (!(x > 0.0) || !std::isfinite(x)) detail::throw_domain("remainder_rrn", "requires x > 0");
  if (n < 1) detail::throw_domain("remainder_rrn", "requires n >= 1");
  if (x < 0.5) {
    // 2 sum_j (-1)^j zeta(n+j+2) x^j
    CompensatedSum<> sum;
    double p = 1.0;
    for (int j = 0; j < 200; ++j) {
      const double t = 2.0 * zeta(n + j + 2.0) * p;
      sum.add(t);
      if (std::abs(t) < 1e-18 * std::abs(sum.value())) break;
      p *= -x;
    }
    return sum.value();
  }
  CompensatedSum<> bracket;
  bracket.add(-2.0 * (psi(x + 1.0) + euler_gamma));
  double p = 1.0;
  for (int k = 1; k <= n; ++k) {
    p *= -x;
    bracket.add(-2.0 * zeta(k + 1.0) * p);
  }
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * bracket.value() / std::pow(x, n + 1);
}

double lnb_remainder(double x, int n, int m) {
  if (!(x > 0.0) || !std::isfinite(x)) detail::throw_domain("lnb_remainder", "requires x > 0");
  if (n < 1) detail::throw_domain("lnb_remainder", "requires n >= 1");
  if (m < 0 || m > 2) detail::throw_range("lnb_remainder", "derivative order must be in 0..2");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  if (x <= 0.4) {
    // (-1)^n sum_j l_{n+1+j} x^j, differentiated termwise; |l_k x^k| ~ (2x)^k/k.
    CompensatedSum<> sum;
    for (int j = m; j < 600; ++j) {
      const double t = lnb_series_coeff(n + 1 + j) * falling(j, m) * std::pow(x, j - m);
      sum.add(t);
      if (j > m + 4 && std::abs(t) < 1e-18 * std::abs(sum.value())) break;
    }
    return sign * sum.value();
  }
  // Leibniz on u(x) x^{-n-1} with u = ln(x B/2) - sum_{k=2}^n l_k x^k.
  std::array<double, 3> u{};
  for (int i = 0; i <= m; ++i) {
    CompensatedSum<> s;
    s.add(b_ell_derivative(x, DerivativeOrder{i}));
    for (int k = std::max(2, i); k <= n; ++k) s.add(-lnb_series_coeff(k) * falling(k, i) * std::pow(x, k - i));
    u[static_cast<std::size_t>(i)] = s.value();
  }
  double total = 0.0;
  for (int i = 0; i <= m; ++i) {
    const int r = m - i;
    total += binomial(m, i) * u[static_cast<std::size_t>(i)] * falling(-n - 1.0, r) * std::pow(x, -n - 1.0 - r);
  }
  return sign * total;
}

double remark2_series(double x, int n_terms) {
  if (n_terms < 1 || n_terms > kHsCacheSize) detail::throw_range("remark2_series", "K must be in 1..1024");
  CompensatedSum<> sum;
  double p = 1.0;
  for (int k = 0; k < n_terms; ++k) {
    sum.add(hs_cached(k + 1) * p);
    p *= -x;
  }
  return sum.value();
}

namespace {

struct ConjectureTable {
  std::vector<ConjectureCoefficients> rows;
  std::vector<double> naive;
};

// s_n/4^n = 4 5^{-n-1} + 4 du_n + 16 Q_n with du_n = lambda(2n+1) - 1,
// dv_n = 1 - beta(2n+1) and Q_n = (Q_{n-1} + dv_n)/5, so no term cancels.
const ConjectureTable& conjecture_table() {
  static const ConjectureTable table = [] {
    ConjectureTable t;
    double q = 0.0;
    double p = 0.0;  // sum_k 5^{k-n-1} v_scaled_k
    for (int n = 0; n <= kMaxConjectureIndex; ++n) {
      const double dv = n == 0 ? 1.0 - std::numbers::pi / 4.0 : dirichlet_beta_odd_complement(n);
      const double du = n == 0 ? 0.0 : (n <= 60 ? dirichlet_lambda_excess(2 * n + 1) : 0.0);
      ConjectureCoefficients c;
      c.n = n;
      c.u_scaled = n == 0 ? 4.0 * std::numbers::ln2 : 4.0 + 4.0 * du;
      c.v_scaled = 4.0 - 4.0 * dv;
      q = (q + dv) / 5.0;
      p = (p + c.v_scaled) / 5.0;
      c.s_scaled = n == 0 ? c.u_scaled - 4.0 * p : 4.0 * std::pow(5.0, -n - 1.0) + 4.0 * du + 16.0 * q;
      t.rows.push_back(c);
      t.naive.push_back(c.u_scaled - 4.0 * p);
    }
    return t;
  }();
  return table;
}

void require_conjecture_index(const char* where, int n, int limit) {
  if (n < 0) detail::throw_domain(where, "requires n >= 0");
  if (n > limit) detail::throw_range(where, "n must be <= " + std::to_string(limit));
}

}  // namespace

std::vector<ConjectureCoefficients> conjecture_coeffs(int n_max) {
  require_conjecture_index("conjecture_coeffs", n_max, kMaxConjectureIndex);
  const auto& rows = conjecture_table().rows;
  return {rows.begin(), rows.begin() + n_max + 1};
}

double conjecture_s_scaled_naive(int n) {
  require_conjecture_index("conjecture_s_scaled_naive", n, kMaxConjectureIndex);
  return conjecture_table().naive[static_cast<std::size_t>(n)];
}

double conjecture_u(int n) {
  require_conjecture_index("conjecture_u", n, kMaxUnscaledIndex);
  return std::ldexp(conjecture_table().rows[static_cast<std::size_t>(n)].u_scaled, 2 * n);
}

double conjecture_v(int n) {
  require_conjecture_index("conjecture_v", n, kMaxUnscaledIndex);
  return std::ldexp(conjecture_table().rows[static_cast<std::size_t>(n)].v_scaled, 2 * n);
}

double conjecture_s(int n) {
  require_conjecture_index("conjecture_s", n, kMaxUnscaledIndex);
  return std::ldexp(conjecture_table().rows[static_cast<std::size_t>(n)].s_scaled, 2 * n);
}

double conjecture_f_series(double x, int k) {
  require_unit_open("conjecture_f_series", x);
  if (k < 0 || k > 16) detail::throw_range("conjecture_f_series", "k must be in 0..16");
  const double t = 0.5 - x;
  const auto& rows = conjecture_table().rows;
  CompensatedSum<> sum;
  for (const auto& c : rows) {
    const int e = 2 * c.n - k;
    if (e < 0) continue;
    const double term = c.s_scaled * std::ldexp(1.0, 2 * c.n) * falling(2.0 * c.n, k) * std::pow(t, e);
    sum.add(term);
    if (c.n > k && std::abs(term) < 1e-18 * std::abs(sum.value())) break;
  }
  return sum.value();
}

double lnb_asymptotic(double x, int n_terms, AsymptoticVariant variant) {
  if (!(x >= 1.0) || !std::isfinite(x)) detail::throw_domain("lnb_asymptotic", "requires x >= 1");
  if (n_terms < 1 || n_terms > 10) detail::throw_range("lnb_asymptotic", "n_terms must be in 1..10");
  double sum = 0.0;
  if (variant == AsymptoticVariant::classic) {
    sum = 0.5 * std::log(x);
    for (int k = 1; k <= n_terms; ++k) {
      const double c = (1.0 - std::ldexp(1.0, -2 * k)) * bernoulli_number_value(2 * k) / (k * (2.0 * k - 1.0));
      sum += c * std::pow(x, 1.0 - 2.0 * k);
    }
  } else {
    const double y = x + 0.25;
    sum = 0.5 * std::log(y);
    for (int k = 1; k <= n_terms; ++k) {
      sum += bernoulli_polynomial(2 * k + 1, 0.25) / (k * (2.0 * k + 1.0) * std::pow(y, 2 * k));
    }
  }
  return sum;
}

double reciprocal_b_series(double x, int n_terms) {
  require_unit_open("reciprocal_b_series", x);
  if (n_terms < 1) detail::throw_domain("reciprocal_b_series", "requires N >= 1");
  CompensatedSum<> sum;
  double term = x * x;
  sum.add(term);
  for (int k = 2; k <= n_terms; ++k) {
    const double f = k - 1.0 - x;
    term *= f * f / (k * (k - 1.0));
    sum.add(term);
  }
  return sum.value();
}

}  // namespace betaram
