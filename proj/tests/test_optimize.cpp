#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hurst/errors.hpp"
#include "hurst/optimize.hpp"

namespace {

using hurst::minimize_scalar_bounded;
using hurst::ScalarSearchOptions;

TEST(MinimizeScalarBounded, Quadratic) {
  const auto r = minimize_scalar_bounded([](double x) { return (x - 0.3) * (x - 0.3); },
                                         ScalarSearchOptions{0.0, 1.0});
  EXPECT_NEAR(r.argmin, 0.3, 1e-6);
  EXPECT_LE(r.evals, 500);
  EXPECT_NEAR(r.min_value, 0.0, 1e-12);
}

TEST(MinimizeScalarBounded, MonotoneGoesToLowerBound) {
  const ScalarSearchOptions opts{0.2, 0.9};
  const auto r = minimize_scalar_bounded([](double x) { return x; }, opts);
  EXPECT_GE(r.argmin, 0.2);
  EXPECT_LE(r.argmin - 0.2, opts.xtol);
}

TEST(MinimizeScalarBounded, CosineOnFullPeriod) {
  const auto r = minimize_scalar_bounded([](double x) { return std::cos(x); },
                                         ScalarSearchOptions{0.0, 2.0 * std::numbers::pi});
  EXPECT_NEAR(r.argmin, std::numbers::pi, 1e-6);
}

TEST(MinimizeScalarBounded, TranslationEquivariance) {
  auto f = [](double x) { return std::exp(x) - 2.5 * x + 0.1 * std::sin(7.0 * x); };
  const ScalarSearchOptions base{-1.0, 3.0};
  const auto r0 = minimize_scalar_bounded(f, base);
  for (double c : {-0.37, 0.5, 2.0}) {
    const auto r = minimize_scalar_bounded([&](double x) { return f(x - c); },
                                           ScalarSearchOptions{base.lo + c, base.hi + c});
    EXPECT_NEAR(r.argmin - c, r0.argmin, 2.0 * base.xtol) << "c=" << c;
  }
}

TEST(MinimizeScalarBounded, ObjectiveScalingKeepsEvaluationSequence) {
  auto f = [](double x) { return std::pow(x - 0.62, 4) + 0.05 * (x - 0.62) * (x - 0.62) + 1.0; };
  std::vector<double> base_xs;
  const auto r0 = minimize_scalar_bounded(
      [&](double x) {
        base_xs.push_back(x);
        return f(x);
      },
      ScalarSearchOptions{});
  // Powers of two scale without rounding, so every comparison and parabola
  // step reproduces exactly.
  for (double c : {0.125, 4.0, 1024.0}) {
    std::vector<double> xs;
    const auto r = minimize_scalar_bounded(
        [&](double x) {
          xs.push_back(x);
          return c * f(x);
        },
        ScalarSearchOptions{});
    EXPECT_EQ(r.argmin, r0.argmin) << "c=" << c;
    EXPECT_EQ(xs, base_xs) << "c=" << c;
  }
  for (double c : {3.7, 1e-3}) {
    const auto r = minimize_scalar_bounded([&](double x) { return c * f(x); }, ScalarSearchOptions{});
    EXPECT_NEAR(r.argmin, r0.argmin, 1e-6) << "c=" << c;
  }
}

TEST(MinimizeScalarBounded, NeverLeavesBounds) {
  struct Case {
    double lo, hi, target;
  };
  for (const auto& c : {Case{0.0, 1.0, -5.0}, Case{0.0, 1.0, 5.0}, Case{1e-4, 1 - 1e-4, 0.5},
                        Case{-3.0, -2.0, -2.0}}) {
    minimize_scalar_bounded(
        [&](double x) {
          EXPECT_GE(x, c.lo);
          EXPECT_LE(x, c.hi);
          return std::abs(x - c.target);
        },
        ScalarSearchOptions{c.lo, c.hi});
  }
}

TEST(MinimizeScalarBounded, NonFiniteObjectiveNamesAbscissa) {
  try {
    minimize_scalar_bounded([](double x) { return x > 0.5 ? NAN : x; }, ScalarSearchOptions{});
    FAIL() << "expected optimize_error";
  } catch (const hurst::optimize_error& e) {
    EXPECT_NE(std::string(e.what()).find("at x = "), std::string::npos);
  }
}

TEST(MinimizeScalarBounded, IterationCapCarriesBestPoint) {
  ScalarSearchOptions opts{0.0, 1.0, 1e-9, 3};
  try {
    minimize_scalar_bounded([](double x) { return (x - 0.3) * (x - 0.3); }, opts);
    FAIL() << "expected optimize_error";
  } catch (const hurst::optimize_error& e) {
    EXPECT_TRUE(std::isfinite(e.best_x()));
    EXPECT_GE(e.best_x(), 0.0);
    EXPECT_LE(e.best_x(), 1.0);
    EXPECT_NEAR(e.best_f(), (e.best_x() - 0.3) * (e.best_x() - 0.3), 1e-15);
  }
}

TEST(ScalarSearchOptions, Validation) {
  EXPECT_THROW((ScalarSearchOptions{1.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ScalarSearchOptions{0.0, 1.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ScalarSearchOptions{0.0, 1.0, 2.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ScalarSearchOptions{0.0, 1.0, 1e-6, 0}.validate()), std::invalid_argument);
}

}  // namespace
