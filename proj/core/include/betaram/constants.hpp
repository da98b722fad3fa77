#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numbers>
#include <vector>

namespace betaram {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104215933593992;
inline constexpr double zeta3 = 1.2020569031595942853997381615114499907649862923405;
inline constexpr double zeta5 = 1.0369277551433699263313654864570341680570809195019;

/// Table half-size: Bernoulli numbers B_0..B_{2K+1}, Euler numbers E_0..E_{2K}.
inline constexpr int kTableK = 32;

/// Exact Bernoulli and Euler numbers, built once on first use.
///
/// B_1 = -1/2 (generating function t e^{xt}/(e^t - 1) at x = 0). Odd-index
/// Euler numbers are zero.
struct RationalConstantTable {
  std::vector<BigRational> bernoulli;  // index 0..2K+1
  std::vector<BigInt> euler;           // index 0..2K
  double gamma_euler = euler_gamma;

  /// B_{2k} as doubles for k = 0..K.
  std::vector<double> bernoulli_even_double;
};

/// Process-wide table; construction is thread-safe (function-local static).
const RationalConstantTable& constant_table();

}  // namespace betaram
