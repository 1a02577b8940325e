#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hurst/errors.hpp"

namespace hurst {

struct ScalarSearchOptions {
  double lo = 0.0;
  double hi = 1.0;
  double xtol = 1e-6;
  int max_iter = 500;

  void validate() const {
    if (!(lo < hi)) throw std::invalid_argument("search bounds: lo must be below hi");
    if (!(xtol > 0.0) || !(xtol < hi - lo)) {
      throw std::invalid_argument("search xtol must be positive and below hi - lo");
    }
    if (max_iter < 1) throw std::invalid_argument("search max_iter must be positive");
  }
};

struct ScalarMinimum {
  double argmin = 0.0;
  double min_value = 0.0;
  int evals = 0;
};

/**
 * Brent's bounded minimization: golden-section steps, switched to successive
 * parabolic interpolation when the parabola stays inside the bracket and
 * shrinks fast enough. Only interior points of [lo, hi] are evaluated.
 *
 * Terminates when the bracket half-width around the incumbent falls below
 * 2 (sqrt(eps) |x| + xtol / 3).
 */
template <typename F>
  requires std::invocable<F&, double>
ScalarMinimum minimize_scalar_bounded(F&& f, const ScalarSearchOptions& opts) {
  opts.validate();

  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  const double golden_ratio = 0.5 * (3.0 - std::sqrt(5.0));

  int evals = 0;
  double best_x = std::numeric_limits<double>::quiet_NaN();
  double best_f = std::numeric_limits<double>::infinity();
  auto eval = [&](double x) {
    x = std::clamp(x, opts.lo, opts.hi);
    const double fx = static_cast<double>(f(x));
    ++evals;
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg << "objective returned non-finite value " << fx << " at x = " << x;
      throw optimize_error(msg.str(), best_x, best_f);
    }
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
    return fx;
  };

  double a = opts.lo;
  double b = opts.hi;
  // x: incumbent, w: second best, v: previous w
  double x = a + golden_ratio * (b - a);
  double w = x;
  double v = x;
  double fx = eval(x);
  double fw = fx;
  double fv = fx;
  double step = 0.0;
  double prev_step = 0.0;

  double mid = 0.5 * (a + b);
  double tol1 = sqrt_eps * std::abs(x) + opts.xtol / 3.0;
  double tol2 = 2.0 * tol1;

  while (std::abs(x - mid) > tol2 - 0.5 * (b - a)) {
    if (evals >= opts.max_iter) {
      throw optimize_error("bounded minimization did not converge within " +
                               std::to_string(opts.max_iter) + " evaluations",
                           best_x, best_f);
    }
    bool use_golden = true;
    if (std::abs(prev_step) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double older = prev_step;
      prev_step = step;
      if (std::abs(p) < std::abs(0.5 * q * older) && p > q * (a - x) && p < q * (b - x)) {
        use_golden = false;
        step = p / q;
        const double u = x + step;
        if (u - a < tol2 || b - u < tol2) {
          step = (mid >= x) ? tol1 : -tol1;
        }
      }
    }
    if (use_golden) {
      prev_step = (x >= mid) ? a - x : b - x;
      step = golden_ratio * prev_step;
    }

    const double sign = (step >= 0.0) ? 1.0 : -1.0;
    const double u = x + sign * std::max(std::abs(step), tol1);
    const double fu = eval(u);

    if (fu <= fx) {
      if (u >= x) {
        a = x;
      } else {
        b = x;
      }
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x) {
        a = u;
      } else {
        b = u;
      }
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
    mid = 0.5 * (a + b);
    tol1 = sqrt_eps * std::abs(x) + opts.xtol / 3.0;
    tol2 = 2.0 * tol1;
  }

  return {x, fx, evals};
}

}  // namespace hurst
