#pragma once

#include <cmath>

namespace betaram {

/// Neumaier-compensated running sum.
template <typename T = double>
class CompensatedSum {
 public:
  void add(T term) noexcept {
    const T t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      comp_ += (sum_ - t) + term;
    } else {
      comp_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(T term) noexcept {
    add(term);
    return *this;
  }

  [[nodiscard]] T value() const noexcept { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace betaram
