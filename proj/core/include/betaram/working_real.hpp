#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace betaram {

/// A real value together with the tolerance used whenever it is compared.
///
/// Two values agree when their difference is at most
/// max(abs_tol, rel_tol * |value|), the scale being taken from the reference.
class WorkingReal {
 public:
  constexpr WorkingReal() = default;
  WorkingReal(double value, double abs_tol, double rel_tol)
      : value_(value), abs_tol_(abs_tol), rel_tol_(rel_tol) {
    if (!(std::isfinite(abs_tol) && abs_tol >= 0.0) ||
        !(std::isfinite(rel_tol) && rel_tol >= 0.0)) {
      throw std::invalid_argument("WorkingReal: tolerances must be finite and >= 0");
    }
  }

  [[nodiscard]] double value() const noexcept { return value_; }
  [[nodiscard]] double abs_tol() const noexcept { return abs_tol_; }
  [[nodiscard]] double rel_tol() const noexcept { return rel_tol_; }

  [[nodiscard]] double tolerance() const noexcept {
    return std::max(abs_tol_, rel_tol_ * std::abs(value_));
  }

  [[nodiscard]] bool agrees_with(double other) const noexcept {
    return std::abs(other - value_) <= tolerance();
  }

 private:
  double value_ = 0.0;
  double abs_tol_ = 0.0;
  double rel_tol_ = 0.0;
};

/// |a - b| <= max(abs_tol, rel_tol*|b|)
[[nodiscard]] inline bool close(double a, double b, double abs_tol, double rel_tol) noexcept {
  return std::abs(a - b) <= std::max(abs_tol, rel_tol * std::abs(b));
}

}  // namespace betaram
