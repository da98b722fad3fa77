#pragma once

#include "betaram/monotonicity.hpp"
#include "betaram/series.hpp"

namespace betaram {

struct HsQuery {
  double s = 1.0;
  double eps = 1e-8;
};

/// H(s) = sum_{n>=1} W_n / n^s for s > 1/2, enclosed to radius <= eps.
/// Throws ResourceError when eps is below what 1e8 direct terms reach.
Enclosure hs_eval(const HsQuery& q);

/// Largest k accepted by hs_derivative_limit.
inline constexpr int kMaxDerivativeLimitIndex = 12;

/// (-1)^k/k! lim_{x->0+} d^k/dx^k [sqrt(pi) G(x)/G(x+1/2) - 1/x], which
/// equals H(k+1); Taylor coefficients of exp(ln sqrt(pi) + ln G(1+x) -
/// ln G(x+1/2)) from polygamma values at 1 and 1/2.
double hs_derivative_limit(int k);

inline const GridSpec kGridZetaInequality{1.05, 60.0, 64, Spacing::logarithmic};

/// Default grid for a double-inequality family (1..5).
GridSpec remark3_default_grid(int which);

/// Strict double inequalities (1..5), two points per node: order 0 is the
/// lower side, order 1 the upper side. Margins are cancellation-free
/// relative gaps; a point passes when its margin is resolved positive.
SignReport verify_remark3(int which, const GridSpec& grid, int n);

struct Remark4Values {
  double alternating_zeta_log;  // sum (-1)^n (1-2^{1-n}) zeta(n)/n
  double expected_log;          // ln(4/pi)
  double halved_zeta;           // sum (-1)^{n-1} 2^{-n} zeta(n+1)
  double expected_halved;       // 2 - ln 4
};

Remark4Values remark4_values();
/// Both identities to 1e-10; worst_margin = 1e-10 - max error.
VerificationRecord verify_remark4();

/// (1 - 2^{-x}) zeta(x) > 1 on a grid inside (1, 60]; the margin
/// (1-2^{-x})zeta(x) - 1 is evaluated as 2^{-x} zeta(x, 3/2).
SignReport zeta_functional_inequality(const GridSpec& grid = kGridZetaInequality);

}  // namespace betaram
