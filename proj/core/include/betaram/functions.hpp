#pragma once

namespace betaram {

/// Supported derivative depth of the closed-form chains.
inline constexpr int kMaxDerivativeOrder = 8;

struct DerivativeOrder {
  int m = 0;
};

struct ThetaShiftParams {
  double theta = 1.0;
  int n = 1;
};

// Diagonal beta and Ramanujan functions.
/// B(x) = G(x)^2 / G(2x)
double big_b(double x);
/// R(x) = -2 psi(x) - 2 gamma
double big_r(double x);
/// n-th derivative of ln(x B(x)/2) = 2 ln G(x+1) - ln G(2x+1); n = 0 is the
/// function itself.
double b_ell_derivative(double x, DerivativeOrder n);

/// R(x)/B(x) and its first two derivatives (order 0..2).
double r_over_b(double x, int order = 0);
/// G(2x)/G(x)^2 = 1/B(x).
double reciprocal_big_b(double x);

/// D(x) = (B(x) - R(x))/x^2 and D'(x) (order 0..1).
double d_func(double x, int order = 0);

/// R~_{theta,n}(x) = -2 (psi(n+x) + gamma) / x^theta.
double r_tilde_theta_n(ThetaShiftParams params, double x);
/// (-1)^{m-1} R~^{(m)}(x) for 1 <= m <= 8 (positive when R~' is completely
/// monotone).
double r_tilde_signed_derivative(ThetaShiftParams params, double x, DerivativeOrder m);

/// h_1..h_6 of the monotonicity proofs.
double h_aux(int k, double x);
/// Derivatives: h1 up to order 1, h2 up to 2, h3..h6 up to 1.
double h_aux_derivative(int k, double x, int order);
/// h2'' rewritten through the P_i/Q_i abbreviations.
double h2_second_derivative_pq(double x);
/// Rational closed form of h6(x+1) - h6(x).
double h6_difference(double x);

// Antidiagonal B(x, 1-x) and R(x, 1-x) on (0, 1).
double boundary_r(double x);
double boundary_b(double x);
/// lambda-series route for boundary_r, summed until terms fall below 1e-17.
double boundary_r_series(double x);
/// beta-series route for boundary_b.
double boundary_b_series(double x);

/// F(x) = R(x,1-x) - B(x,1-x)/(1 + x(1-x)) on (0, 1/2).
double conjecture_f(double x);

}  // namespace betaram
