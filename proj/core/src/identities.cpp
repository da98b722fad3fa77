#include "betaram/identities.hpp"

#include "betaram/constants.hpp"
#include "betaram/errors.hpp"
#include "betaram/functions.hpp"
#include "betaram/kernels.hpp"
#include "betaram/summation.hpp"
#include "wallis_tail.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace betaram {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

PointResult point(double x, int side, double margin, bool pass, std::string reason = {}) {
  if (!pass && reason.empty()) reason = "inequality violated";
  return {x, side, margin, pass, std::move(reason)};
}

// 2/x + 2 sum_{k=1}^m (-1)^k zeta(k+1) x^k and the sum of |terms|.
std::pair<double, double> r_polynomial(double x, int m) {
  CompensatedSum<> s;
  s.add(2.0 / x);
  double scale = 2.0 / x;
  double p = 1.0;
  for (int k = 1; k <= m; ++k) {
    p *= -x;
    const double t = 2.0 * zeta(k + 1.0) * p;
    s.add(t);
    scale += std::abs(t);
  }
  return {s.value(), scale};
}

std::vector<PointResult> remark3_items(int which, double x, int n) {
  switch (which) {
    case 1: {
      // B = (2/x) exp(l(x)); l - P_{2n} = x^{2n+1} T_{2n} and
      // l - P_{2n+1} = -x^{2n+2} T_{2n+1}, with T the remainder functions.
      const double y0 = std::pow(x, 2 * n + 1) * lnb_remainder(x, 2 * n, 0);
      const double y1 = std::pow(x, 2 * n + 2) * lnb_remainder(x, 2 * n + 1, 0);
      const double lower = -std::expm1(-y0);  // (B - lower)/B
      const double upper = -std::expm1(-y1);  // (upper - B)/upper
      return {point(x, 0, lower, lower > 0.0), point(x, 1, upper, upper > 0.0)};
    }
    case 2: {
      double head = 0.0;
      for (int k = 0; k <= n; ++k) head += wallis_ratio(k) / (x + k);
      const Enclosure br1 = remainder_br1(x, n);
      const Enclosure lambda = wallis_tail_lambda(n);
      const double total = head + br1.mid;
      const double gap = lambda.mid - br1.mid;
      return {point(x, 0, br1.mid / total, br1.lo() > 0.0),
              point(x, 1, gap / total, gap > lambda.rad + br1.rad,
                    gap > 0.0 ? "gap not resolved by the enclosures" : "")};
    }
    case 3: {
      std::vector<PointResult> out;
      const double r = big_r(x);
      for (int side = 0; side <= 1; ++side) {
        const int m = 2 * n - 1 + side;
        const double gap = remainder_rrn(x, m);
        // Direct R - S_m must agree in sign unless it is below rounding.
        const auto [s, scale] = r_polynomial(x, m);
        const double direct = side == 0 ? r - s : s - r;
        const bool direct_ok = direct > 0.0 || std::abs(direct) <= 64.0 * kEps * (scale + std::abs(r));
        out.push_back(point(x, side, gap, gap > 0.0 && direct_ok,
                            direct_ok ? "" : "direct difference contradicts the remainder"));
      }
      return out;
    }
    case 4: {
      const double rb = r_over_b(x, 0);
      const double one_minus = x * x * d_func(x, 0) * reciprocal_big_b(x);  // 1 - R/B
      const double lower = rb - (1.0 - x);
      return {point(x, 0, lower, lower > 0.0), point(x, 1, one_minus, one_minus > 0.0)};
    }
    case 5: {
      const double d = d_func(x, 0);
      const double lower = d - 4.0 * (std::numbers::pi - 4.0 * std::numbers::ln2);
      const double upper = 2.0 * zeta3 - d;
      return {point(x, 0, lower, lower > 0.0), point(x, 1, upper, upper > 0.0)};
    }
    default: break;
  }
  detail::throw_range("verify_remark3", "item must be in 1..5");
}

}  // namespace

Enclosure hs_eval(const HsQuery& q) {
  if (!(q.s > 0.5) || !std::isfinite(q.s)) detail::throw_domain("hs_eval", "requires s > 1/2");
  if (!(q.eps > 0.0)) detail::throw_domain("hs_eval", "requires eps > 0");
  return detail::adaptive_enclosure("hs_eval", 64, q.eps, 100'000'000L, [&](long n) {
    const auto b = detail::wallis_weighted_sum(0, n, 0.0, q.s);
    return Enclosure{0.5 * (b.lo + b.hi), 0.5 * (b.hi - b.lo)};
  });
}

double hs_derivative_limit(int k) {
  if (k < 0 || k > kMaxDerivativeLimitIndex) {
    detail::throw_range("hs_derivative_limit", "k must be in 0.." + std::to_string(kMaxDerivativeLimitIndex));
  }
  // L(x) = sum_j L_j x^j, L_j = [psi^{(j-1)}(1) - psi^{(j-1)}(1/2)]/j!;
  // exp(L) = sum q_m x^m with m q_m = sum_j j L_j q_{m-j}.
  const int top = k + 1;
  std::vector<double> l(static_cast<std::size_t>(top) + 1, 0.0);
  for (int j = 1; j <= top; ++j) {
    const PolygammaOrder o{j - 1};
    l[static_cast<std::size_t>(j)] = (polygamma(o, 1.0) - polygamma(o, 0.5)) / factorial(j);
  }
  std::vector<double> q(static_cast<std::size_t>(top) + 1, 0.0);
  q[0] = 1.0;
  for (int m = 1; m <= top; ++m) {
    CompensatedSum<> s;
    for (int j = 1; j <= m; ++j) s.add(j * l[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(m - j)]);
    q[static_cast<std::size_t>(m)] = s.value() / m;
  }
  return (k % 2 == 0 ? 1.0 : -1.0) * q[static_cast<std::size_t>(top)];
}

GridSpec remark3_default_grid(int which) {
  switch (which) {
    case 1:
    case 2:
    case 3: return kGridHalfLine;
    case 4: return kGridUnitInterval;
    case 5: return kGridHalfInterval;
    default: detail::throw_range("remark3_default_grid", "item must be in 1..5");
  }
}

SignReport verify_remark3(int which, const GridSpec& grid, int n) {
  if (which < 1 || which > 5) detail::throw_range("verify_remark3", "item must be in 1..5");
  if (n < 1) detail::throw_domain("verify_remark3", "requires n >= 1");
  grid.validate();
  const double hi_limit = which == 4 ? 1.0 : (which == 5 ? 0.5 : std::numeric_limits<double>::infinity());
  if (!(grid.lo > 0.0) || !(grid.hi < hi_limit)) {
    detail::throw_domain("verify_remark3", "grid " + grid.str() + " outside the item's domain");
  }
  std::vector<PointResult> points;
  for (double x : grid.nodes()) {
    try {
      for (auto& p : remark3_items(which, x, n)) points.push_back(std::move(p));
    } catch (const RangeError&) {
      throw;
    } catch (const std::exception& e) {
      points.push_back({x, 0, std::numeric_limits<double>::quiet_NaN(), false, e.what()});
    }
  }
  return summarize("remark-3-" + std::to_string(which), grid, std::move(points),
                   "n=" + std::to_string(n) + "; order 0 lower side, order 1 upper side");
}

Remark4Values remark4_values() {
  Remark4Values v{};
  // (-1)^n (1-2^{1-n}) zeta(n)/n = (-1)^n/n + (-1)^n e_n/n with
  // e_n = (zeta(n)-1) - 2^{1-n} zeta(n) = O(2^{-n}); sum_{n>=2} (-1)^n/n = 1 - ln 2.
  CompensatedSum<> s1;
  s1.add(1.0 - std::numbers::ln2);
  for (int n = 2; n < 400; ++n) {
    const double e = zeta_minus_one(n) - std::ldexp(zeta(n), 1 - n);
    const double t = (n % 2 == 0 ? 1.0 : -1.0) * e / n;
    s1.add(t);
    if (std::abs(t) < 1e-18) break;
  }
  v.alternating_zeta_log = s1.value();
  v.expected_log = std::log(4.0 / std::numbers::pi);

  CompensatedSum<> s2;
  for (int n = 1; n < 400; ++n) {
    const double t = (n % 2 == 1 ? 1.0 : -1.0) * std::ldexp(zeta(n + 1.0), -n);
    s2.add(t);
    if (std::abs(t) < 1e-18) break;
  }
  v.halved_zeta = s2.value();
  v.expected_halved = 2.0 - 2.0 * std::numbers::ln2;
  return v;
}

VerificationRecord verify_remark4() {
  constexpr double tol = 1e-10;
  const Remark4Values v = remark4_values();
  const double err1 = std::abs(v.alternating_zeta_log - v.expected_log);
  const double err2 = std::abs(v.halved_zeta - v.expected_halved);
  const double worst = std::max(err1, err2);
  char buf[160];
  std::snprintf(buf, sizeof buf, "errors %.3g (ln(4/pi)), %.3g (2-ln4)", err1, err2);
  return {"remark-4", worst <= tol, tol - worst, "", buf};
}

SignReport zeta_functional_inequality(const GridSpec& grid) {
  grid.validate();
  if (!(grid.lo > 1.0) || !(grid.hi <= 60.0)) {
    detail::throw_domain("zeta_functional_inequality", "grid must lie in (1, 60]");
  }
  std::vector<PointResult> points;
  for (double x : grid.nodes()) {
    // (1-2^{-x}) zeta(x) - 1 = sum over odd k >= 3 of k^{-x} = 2^{-x} zeta(x, 3/2)
    const double margin = std::exp2(-x) * hurwitz_zeta(x, 1.5);
    points.push_back(point(x, 0, margin, margin > 0.0));
  }
  return summarize("zeta-inequality", grid, std::move(points), "margin (1-2^-x)zeta(x)-1");
}

}  // namespace betaram
