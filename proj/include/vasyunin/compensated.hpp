#pragma once

#include <cmath>

namespace vasyunin {

/// Neumaier compensated accumulator (two-term error-free transformation).
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double total() const { return sum + comp; }
};

}  // namespace vasyunin
