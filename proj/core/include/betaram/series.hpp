#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace betaram {

/// [mid - rad, mid + rad] contains the true value.
struct Enclosure {
  double mid = 0.0;
  double rad = 0.0;

  [[nodiscard]] double lo() const noexcept { return mid - rad; }
  [[nodiscard]] double hi() const noexcept { return mid + rad; }
  [[nodiscard]] bool contains(double v, double slack = 0.0) const noexcept {
    return v >= lo() - slack && v <= hi() + slack;
  }
};

/// sum_k c_k (x - center)^k with a certified tail bound.
struct SeriesExpansion {
  double center = 0.0;
  std::function<double(int)> coefficient;
  double valid_lo = 0.0;  // open end
  double valid_hi = 0.0;  // closed end
  /// Bound on |sum_{k>N} c_k (x-center)^k|; nullopt when no bound is known.
  std::function<std::optional<double>(int, double)> tail_bound;

  [[nodiscard]] bool in_domain(double x) const noexcept { return x > valid_lo && x <= valid_hi; }
  /// Partial sum through index N with rad = tail bound (infinite if unbounded).
  [[nodiscard]] Enclosure evaluate(double x, int n_terms) const;
};

// ln(x B(x)/2) = sum_{n>=2} l_n x^n on (0, 1/2].
double lnb_series_coeff(int n);
SeriesExpansion lnb_series();

// R(x) - 2/x = 2 sum_{n>=1} (-1)^n zeta(n+1) x^n on (0, 1).
SeriesExpansion r_regular_series();
/// 2/x + 2 sum_{n=1}^{N} (-1)^n zeta(n+1) x^n; rad is the first omitted term.
Enclosure r_power_series(double x, int n_terms);
/// Same partial sum without the enclosure.
double r_partial_sum(double x, int n_terms);

// Hypergeometric routes to B(x).
Enclosure b_hyper_sum_1(double x, double eps);
Enclosure b_hyper_sum_2(double x, double eps);

// x B(x)/2 = sum a_k x^k on (0, 1).
inline constexpr int kMaxRecurrenceIndex = 200;
/// a_k from the H(m) inner sums.
double b_power_coeff_closed(int k);
/// a_k from the logarithmic-derivative recurrence (extended precision, k <= 200).
double b_power_coeff_recurrence(int k);
SeriesExpansion b_power_series();
/// (2/x) sum a_k x^k, truncated adaptively to meet eps.
Enclosure b_power_series_sum(double x, double eps);

/// H(m) = sum_{n>=1} W_n / n^m from a process-wide cache (m >= 1).
double hs_cached(int m);
inline constexpr int kHsCacheSize = 1024;

// Remainders.
/// 2^{2x-1} B(x) - sum_{k<=n} W_k/(x+k) = sum_{k>n} W_k/(x+k).
Enclosure remainder_br1(double x, int n);
/// B(x) - 2 sum_{k<=n} (1-x)_k/((x+k+1) k!), 0 < x < 1.
Enclosure remainder_br2(double x, int n);
/// lambda_n = sum_{k>n} W_k / k.
Enclosure wallis_tail_lambda(int n);
/// (-1)^{n-1} x^{-n-1} [R(x) - 2/x - 2 sum_{k=1}^n (-1)^k zeta(k+1) x^k].
double remainder_rrn(double x, int n);
/// m-th derivative (m <= 2) of (-1)^n x^{-n-1} [ln(x B(x)/2) - sum_{k=2}^n l_k x^k].
double lnb_remainder(double x, int n, int m = 0);

/// Partial sum of sum_k (-1)^k H(k+1) x^k, k = 0..K-1.
double remark2_series(double x, int n_terms);

// Antidiagonal coefficients, all scaled by 4^{-n}.
struct ConjectureCoefficients {
  int n = 0;
  double u_scaled = 0.0;
  double v_scaled = 0.0;
  double s_scaled = 0.0;
};
inline constexpr int kMaxConjectureIndex = 300;
inline constexpr int kMaxUnscaledIndex = 150;
std::vector<ConjectureCoefficients> conjecture_coeffs(int n_max);
/// s_n / 4^n by direct subtraction u - (4/5)^{n+1} sum (5/4)^k v_k; loses
/// digits as n grows, kept as a cross-check.
double conjecture_s_scaled_naive(int n);
double conjecture_u(int n);
double conjecture_v(int n);
double conjecture_s(int n);
/// (-1)^k F^{(k)}(x) summed from the s_n series, t = 1/2 - x.
double conjecture_f_series(double x, int k = 0);

enum class AsymptoticVariant { classic, shifted };
/// Approximation to ln(G(x+1)/G(x+1/2)) for x >= 1 with 1..10 terms.
double lnb_asymptotic(double x, int n_terms, AsymptoticVariant variant);

/// sum_{k=1}^{N} (-x)_k^2/(k!(k-1)!) for 0 < x < 1.
double reciprocal_b_series(double x, int n_terms);

}  // namespace betaram
