#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurst/errors.hpp"
#include "hurst/series.hpp"

// Classical Hurst estimators. All take a path (fBm-like levels) and end in a
// least-squares slope on log-log axes.

namespace hurst {

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = intercept + slope x.
inline RegressionFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("fit_line: need at least 2 points");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_line: need at least 2 distinct abscissae");
  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return fit;
}

/// Clamped estimate, the unclamped slope-derived value, and the fit behind it.
struct BaselineEstimate {
  double value = 0.0;
  double raw = 0.0;
  RegressionFit fit;
};

namespace detail {

inline BaselineEstimate clamped(double raw, const RegressionFit& fit) {
  return {std::clamp(raw, 0.0, 1.0), raw, fit};
}

/// first, 2 first, 4 first, ... up to and including `last`
inline std::vector<std::size_t> doubling_grid(std::size_t first, std::size_t last) {
  std::vector<std::size_t> grid;
  for (std::size_t w = first; w <= last; w *= 2) grid.push_back(w);
  return grid;
}

inline RegressionFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx(x.size());
  std::vector<double> ly(y.size());
  std::transform(x.begin(), x.end(), lx.begin(), [](double v) { return std::log(v); });
  std::transform(y.begin(), y.end(), ly.begin(), [](double v) { return std::log(v); });
  return fit_line(lx, ly);
}

}  // namespace detail

/**
 * Rescaled range. Increments are split into floor(n/w) chunks for chunk sizes
 * w = min_chunk * 2^i <= n. Per chunk, R is the range of the mean-adjusted
 * running sum and S the population standard deviation; R/S is averaged over
 * chunks and H is the slope of log(R/S) against log w. Constant chunks are
 * skipped.
 */
inline BaselineEstimate rs_fit(std::span<const double> path, std::size_t min_chunk = 8) {
  if (path.size() < 32) throw std::invalid_argument("R/S: need a path of length >= 32");
  if (min_chunk < 2) throw std::invalid_argument("R/S: min_chunk must be >= 2");
  const auto inc = first_difference(path);
  const std::size_t n = inc.size();

  std::vector<double> sizes;
  std::vector<double> ratios;
  for (std::size_t w : detail::doubling_grid(min_chunk, n)) {
    double total = 0.0;
    std::size_t used = 0;
    for (std::size_t c = 0; c + w <= n; c += w) {
      const std::span<const double> chunk(inc.data() + c, w);
      if (is_effectively_constant(chunk)) continue;
      const double mean = std::accumulate(chunk.begin(), chunk.end(), 0.0) / static_cast<double>(w);
      double level = 0.0;
      double lo = 0.0;
      double hi = 0.0;
      double ss = 0.0;
      for (double x : chunk) {
        level += x - mean;
        lo = std::min(lo, level);
        hi = std::max(hi, level);
        ss += (x - mean) * (x - mean);
      }
      const double sd = std::sqrt(ss / static_cast<double>(w));
      if (!(sd > 0.0) || !(hi - lo > 0.0)) continue;
      total += (hi - lo) / sd;
      ++used;
    }
    if (used > 0) {
      sizes.push_back(static_cast<double>(w));
      ratios.push_back(total / static_cast<double>(used));
    }
  }
  if (sizes.size() < 2) throw degenerate_series("R/S: fewer than two chunk sizes have variation");
  const auto fit = detail::fit_loglog(sizes, ratios);
  return detail::clamped(fit.slope, fit);
}

inline double estimate_rs(std::span<const double> path, std::size_t min_chunk = 8) {
  return rs_fit(path, min_chunk).value;
}

/**
 * Higuchi's fractal dimension D from curve lengths at lags k = 1..kmax;
 * H = 2 - D. Each offset m contributes
 * L_m(k) = sum_i |y[m + ik] - y[m + (i-1)k]| (N - 1) / (floor((N-1-m)/k) k) / k.
 */
inline BaselineEstimate higuchi_fit(std::span<const double> path, std::size_t kmax = 10) {
  if (kmax < 2) throw std::invalid_argument("Higuchi: kmax must be >= 2");
  if (path.size() < 10 * kmax) {
    throw std::invalid_argument("Higuchi: need a path of length >= 10 * kmax = " +
                                std::to_string(10 * kmax));
  }
  const std::size_t n = path.size();
  std::vector<double> inv_k;
  std::vector<double> lengths;
  for (std::size_t k = 1; k <= kmax; ++k) {
    double sum_over_offsets = 0.0;
    for (std::size_t m = 0; m < k; ++m) {
      const std::size_t steps = (n - 1 - m) / k;
      double curve = 0.0;
      for (std::size_t i = 1; i <= steps; ++i) {
        curve += std::abs(path[m + i * k] - path[m + (i - 1) * k]);
      }
      const double norm = static_cast<double>(n - 1) / (static_cast<double>(steps * k));
      sum_over_offsets += curve * norm / static_cast<double>(k);
    }
    const double length = sum_over_offsets / static_cast<double>(k);
    if (!(length > 0.0)) throw degenerate_series("Higuchi: zero curve length");
    inv_k.push_back(1.0 / static_cast<double>(k));
    lengths.push_back(length);
  }
  const auto fit = detail::fit_loglog(inv_k, lengths);
  return detail::clamped(2.0 - fit.slope, fit);
}

inline double estimate_higuchi(std::span<const double> path, std::size_t kmax = 10) {
  return higuchi_fit(path, kmax).value;
}

/**
 * Detrended fluctuation analysis (order 1). The profile is the running sum of
 * demeaned increments; for window sizes w = 8, 16, ... <= len/4 it is cut into
 * floor(N/w) segments, each segment's least-squares line is removed, and
 * F(w) is the RMS residual. H is the slope of log F against log w.
 */
inline BaselineEstimate dfa_fit(std::span<const double> path) {
  if (path.size() < 64) throw std::invalid_argument("DFA: need a path of length >= 64");
  const auto inc = first_difference(path);
  if (is_effectively_constant(inc)) throw degenerate_series("DFA: increments have zero variance");
  const double mean = std::accumulate(inc.begin(), inc.end(), 0.0) / static_cast<double>(inc.size());
  std::vector<double> profile(inc.size());
  double level = 0.0;
  for (std::size_t t = 0; t < inc.size(); ++t) {
    level += inc[t] - mean;
    profile[t] = level;
  }
  const std::size_t n = profile.size();

  std::vector<double> sizes;
  std::vector<double> fluct;
  for (std::size_t w : detail::doubling_grid(8, path.size() / 4)) {
    const std::size_t segments = n / w;
    if (segments == 0) break;
    // abscissae 0..w-1 are shared by every segment
    const double wd = static_cast<double>(w);
    const double tbar = 0.5 * (wd - 1.0);
    const double stt = wd * (wd * wd - 1.0) / 12.0;
    double total = 0.0;
    for (std::size_t s = 0; s < segments; ++s) {
      const double* seg = profile.data() + s * w;
      double ybar = 0.0;
      for (std::size_t t = 0; t < w; ++t) ybar += seg[t];
      ybar /= wd;
      double sty = 0.0;
      for (std::size_t t = 0; t < w; ++t) sty += (static_cast<double>(t) - tbar) * (seg[t] - ybar);
      const double slope = sty / stt;
      double rss = 0.0;
      for (std::size_t t = 0; t < w; ++t) {
        const double r = seg[t] - ybar - slope * (static_cast<double>(t) - tbar);
        rss += r * r;
      }
      total += rss / wd;
    }
    const double f = std::sqrt(total / static_cast<double>(segments));
    if (!(f > 0.0)) throw degenerate_series("DFA: zero fluctuation after detrending");
    sizes.push_back(wd);
    fluct.push_back(f);
  }
  if (sizes.size() < 2) throw std::invalid_argument("DFA: fewer than two window sizes");
  const auto fit = detail::fit_loglog(sizes, fluct);
  return detail::clamped(fit.slope, fit);
}

inline double estimate_dfa(std::span<const double> path) { return dfa_fit(path).value; }

/**
 * Variogram of order p: V_p(l) = mean_t |y[t+l] - y[t]|^p for each lag l;
 * H is the slope of log V_p against log l, divided by p. With p = 1 and lags
 * {1, 2} this is the madogram estimator.
 */
inline BaselineEstimate variogram_fit(std::span<const double> path, double p = 1.0,
                                      std::span<const std::size_t> lags = {}) {
  static constexpr std::size_t kDefaultLags[] = {1, 2};
  if (lags.empty()) lags = kDefaultLags;
  if (!(p > 0.0)) throw std::invalid_argument("variogram: order p must be positive");
  if (path.size() < 16) throw std::invalid_argument("variogram: need a path of length >= 16");
  std::vector<double> lx;
  std::vector<double> values;
  for (std::size_t lag : lags) {
    if (lag == 0 || lag >= path.size()) throw std::invalid_argument("variogram: invalid lag");
    double total = 0.0;
    const std::size_t count = path.size() - lag;
    for (std::size_t t = 0; t < count; ++t) {
      const double d = std::abs(path[t + lag] - path[t]);
      total += (p == 1.0) ? d : std::pow(d, p);
    }
    const double v = total / static_cast<double>(count);
    if (!(v > 0.0)) throw degenerate_series("variogram: zero variogram at lag " + std::to_string(lag));
    lx.push_back(static_cast<double>(lag));
    values.push_back(v);
  }
  const auto fit = detail::fit_loglog(lx, values);
  return detail::clamped(fit.slope / p, fit);
}

inline double estimate_variogram(std::span<const double> path, double p = 1.0,
                                 std::span<const std::size_t> lags = {}) {
  return variogram_fit(path, p, lags).value;
}

}  // namespace hurst
