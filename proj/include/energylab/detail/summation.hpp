#pragma once

#include <cmath>

namespace energylab::detail {

// Neumaier's improved Kahan summation. Order-dependent but deterministic.
template <typename T>
class BasicCompensatedSum {
 public:
  void add(T x) noexcept {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  BasicCompensatedSum& operator+=(T x) noexcept {
    add(x);
    return *this;
  }

  T value() const noexcept { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;
using ExtendedSum = BasicCompensatedSum<long double>;

}  // namespace energylab::detail
