#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "hurst/baselines.hpp"
#include "hurst/errors.hpp"
#include "hurst/synth.hpp"

namespace {

using namespace hurst;

std::vector<double> ramp(std::size_t n, double step = 1.0) {
  std::vector<double> y(n);
  for (std::size_t t = 0; t < n; ++t) y[t] = step * static_cast<double>(t);
  return y;
}

std::vector<double> white_path(std::size_t n, std::uint64_t seed) {
  return generate(GenSpec{GenModel::fbm, 0.5, n, seed, 1.0}).values;
}

TEST(FitLine, ExactLine) {
  const std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
  const std::vector<double> y = {3.0, 5.0, 7.0, 9.0};
  const auto fit = fit_line(x, y);
  EXPECT_NEAR(fit.slope, 2.0, 1e-15);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-14);
  EXPECT_NEAR(fit.r2, 1.0, 1e-15);
  EXPECT_THROW(fit_line(std::vector<double>{1.0, 1.0}, std::vector<double>{0.0, 2.0}),
               std::invalid_argument);
  EXPECT_THROW(fit_line(std::vector<double>{1.0}, std::vector<double>{0.0}), std::invalid_argument);
}

TEST(Higuchi, RampHasDimensionOne) {
  const auto fit = higuchi_fit(ramp(500));
  EXPECT_NEAR(fit.value, 1.0, 0.02);
  EXPECT_NEAR(fit.raw, 1.0, 1e-12);
}

TEST(Variogram, RampIsExactPowerLaw) {
  EXPECT_NEAR(estimate_variogram(ramp(100, 0.3)), 1.0, 1e-12);
}

TEST(Variogram, ClampsButKeepsRaw) {
  std::vector<double> quad(200);
  for (std::size_t t = 0; t < quad.size(); ++t) quad[t] = static_cast<double>(t * t);
  const auto fit = variogram_fit(quad);
  EXPECT_GT(fit.raw, 1.0);
  EXPECT_EQ(fit.value, 1.0);
}

TEST(Variogram, MadogramScalingLaw) {
  const std::size_t n = 32768;
  const auto path = generate(GenSpec{GenModel::fbm, 0.3, n, 77, 1.0}).values;
  auto madogram = [&](std::size_t lag) {
    double s = 0.0;
    for (std::size_t t = 0; t + lag < n; ++t) s += std::abs(path[t + lag] - path[t]);
    return s / static_cast<double>(n - lag);
  };
  EXPECT_NEAR(madogram(2) / madogram(1), std::pow(2.0, 0.3), 0.05 * std::pow(2.0, 0.3));
  EXPECT_NEAR(estimate_variogram(path), 0.3, 0.05);
}

TEST(Dfa, RampIsDegenerate) {
  try {
    estimate_dfa(ramp(256, 2.0));
    FAIL() << "expected degenerate_series";
  } catch (const degenerate_series& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate series"), std::string::npos);
  }
}

TEST(RescaledRange, RampIsDegenerate) {
  EXPECT_THROW(estimate_rs(ramp(256)), degenerate_series);
}

TEST(Baselines, WhiteNoiseRanges) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_NEAR(estimate_rs(white_path(8192, seed)), 0.5, 0.15) << "seed=" << seed;
    EXPECT_NEAR(estimate_dfa(white_path(4096, seed)), 0.5, 0.1) << "seed=" << seed;
    EXPECT_NEAR(estimate_higuchi(white_path(4096, seed)), 0.5, 0.1) << "seed=" << seed;
    EXPECT_NEAR(estimate_variogram(white_path(4096, seed)), 0.5, 0.1) << "seed=" << seed;
  }
}

TEST(Baselines, TrackPersistence) {
  for (double h : {0.2, 0.8}) {
    const auto path = generate(GenSpec{GenModel::fbm, h, 4096, 3, 1.0}).values;
    EXPECT_NEAR(estimate_higuchi(path), h, 0.1) << "H=" << h;
    EXPECT_NEAR(estimate_variogram(path), h, 0.1) << "H=" << h;
    EXPECT_NEAR(estimate_dfa(path), h, 0.15) << "H=" << h;
  }
}

using Estimator = std::function<double(std::span<const double>)>;

std::vector<std::pair<const char*, Estimator>> all_baselines() {
  return {{"rs", [](std::span<const double> p) { return estimate_rs(p); }},
          {"higuchi", [](std::span<const double> p) { return estimate_higuchi(p); }},
          {"dfa", [](std::span<const double> p) { return estimate_dfa(p); }},
          {"variogram", [](std::span<const double> p) { return estimate_variogram(p); }}};
}

TEST(Baselines, ScaleTranslationInvariantAndDeterministic) {
  const auto path = generate(GenSpec{GenModel::fbm, 0.65, 2048, 11, 1.0}).values;
  for (const auto& [name, est] : all_baselines()) {
    const double base = est(path);
    EXPECT_EQ(est(path), base) << name;
    for (double c : {0.01, 3.0, 250.0}) {
      std::vector<double> scaled(path);
      for (auto& v : scaled) v *= c;
      EXPECT_NEAR(est(scaled), base, 1e-10) << name << " c=" << c;
    }
    for (double c : {-40.0, 0.5, 1e3}) {
      std::vector<double> shifted(path);
      for (auto& v : shifted) v += c;
      EXPECT_NEAR(est(shifted), base, 1e-9) << name << " c=" << c;
    }
  }
}

TEST(Baselines, ValuesClampedToUnitInterval) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (double h : {0.02, 0.98}) {
      const auto path = generate(GenSpec{GenModel::fbm, h, 256, seed, 1.0}).values;
      for (const auto& [name, est] : all_baselines()) {
        const double v = est(path);
        EXPECT_GE(v, 0.0) << name;
        EXPECT_LE(v, 1.0) << name;
      }
    }
  }
}

TEST(Baselines, LengthPreconditions) {
  EXPECT_THROW(estimate_rs(white_path(31, 1)), std::invalid_argument);
  EXPECT_NO_THROW(estimate_rs(white_path(32, 1)));
  EXPECT_THROW(estimate_higuchi(white_path(99, 1)), std::invalid_argument);
  EXPECT_NO_THROW(estimate_higuchi(white_path(100, 1)));
  EXPECT_THROW(estimate_higuchi(white_path(49, 1), 5), std::invalid_argument);
  EXPECT_THROW(estimate_dfa(white_path(63, 1)), std::invalid_argument);
  EXPECT_NO_THROW(estimate_dfa(white_path(64, 1)));
  EXPECT_THROW(estimate_variogram(white_path(15, 1)), std::invalid_argument);
  EXPECT_NO_THROW(estimate_variogram(white_path(16, 1)));
  EXPECT_THROW(estimate_variogram(std::vector<double>(40, 2.0)), degenerate_series);
}

}  // namespace
