#pragma once

// Certified sums of Wallis-weighted and Pochhammer-weighted series.

namespace betaram::detail {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Encloses sum_{n>=a} (n+c)^{-p} (n+b)^{-q} for p+q > 1.
///
/// Euler-Maclaurin through B_4; the integral is expanded in (b-c)/(a+c),
/// so a must satisfy |b-c| <= (a+c)/2.
Bracket power_tail_sum(long a, double c, double p, double b, double q);

/// Encloses sum_{n>first} W_n (n+b)^{-q}, q > 1/2, b >= 0, with the
/// direct part summed over n = first+1..last.
Bracket wallis_weighted_sum(long first, long last, double b, double q);

/// Encloses sum_{n>first} (1-x)_n/n! / (n+x+1), 0 < x < 1, with the direct
/// part summed over n = first+1..last.
Bracket pochhammer_weighted_sum(long first, long last, double x);

}  // namespace betaram::detail

#include "betaram/series.hpp"

#include <functional>

namespace betaram::detail {

/// Evaluates sum(N) for N = start, 4 start, ... until rad <= eps. Throws
/// ResourceError past limit terms or once the radius stops shrinking.
Enclosure adaptive_enclosure(const char* where, long start, double eps, long limit,
                             const std::function<Enclosure(long)>& sum);

}  // namespace betaram::detail
