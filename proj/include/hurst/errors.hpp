#pragma once

#include <stdexcept>
#include <string>

namespace hurst {

/// Input series carries no usable variation (constant level, constant
/// increments, zero fluctuation at every scale).
class degenerate_series : public std::runtime_error {
 public:
  explicit degenerate_series(const std::string& what)
      : std::runtime_error("degenerate series: " + what) {}
};

/// Bounded minimizer failure. Carries the best abscissa seen so far.
class optimize_error : public std::runtime_error {
 public:
  optimize_error(const std::string& what, double best_x, double best_f)
      : std::runtime_error(what), best_x_(best_x), best_f_(best_f) {}

  double best_x() const noexcept { return best_x_; }
  double best_f() const noexcept { return best_f_; }

 private:
  double best_x_;
  double best_f_;
};

}  // namespace hurst
