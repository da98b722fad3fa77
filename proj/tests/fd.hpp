#pragma once

#include <functional>

// Five-point central difference, step h.
inline double fd5(const std::function<double(double)>& f, double x, double h = 1e-4) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
