#pragma once

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurst/errors.hpp"
#include "hurst/fft.hpp"
#include "hurst/optimize.hpp"
#include "hurst/series.hpp"
#include "hurst/spectral.hpp"

namespace hurst {

inline constexpr std::size_t kMinIncrements = 16;

/// Default search interval for H; the densities degenerate at 0 and 1.
inline ScalarSearchOptions default_hurst_search() { return {1e-4, 1.0 - 1e-4, 1e-6, 500}; }

struct WhittleOptions {
  SpectrumModel model = FgnPaxson{10};
  ScalarSearchOptions search = default_hurst_search();
  InputKind input_kind = InputKind::path;
};

/**
 * Whittle objective sum_j I(lambda_j) / f*_H(lambda_j) over the periodogram
 * grid, where f* is the model density divided by its geometric mean over the
 * same grid. Additive and multiplicative constants of the likelihood are
 * dropped, so the value is only meaningful up to scale.
 */
inline double whittle_objective(HurstParam hurst, const Periodogram& pg,
                                const SpectrumModel& model) {
  const auto density = spectral_density(hurst, pg.frequencies, 1.0, model);
  const auto normalized = normalize_by_geometric_mean(density);
  double total = 0.0;
  for (std::size_t j = 0; j < normalized.size(); ++j) total += pg.ordinates[j] / normalized[j];
  return total;
}

namespace detail {

/// Increments with their sample mean removed; rejects short and constant input.
inline std::vector<double> prepare_increments(std::span<const double> series, InputKind kind) {
  auto inc = to_increments(series, kind);
  if (inc.size() < kMinIncrements) {
    throw std::invalid_argument("series too short: need at least " +
                                std::to_string(kMinIncrements) + " increments, got " +
                                std::to_string(inc.size()));
  }
  if (is_effectively_constant(inc)) throw degenerate_series("increments have zero variance");
  const double mean = std::accumulate(inc.begin(), inc.end(), 0.0) / static_cast<double>(inc.size());
  for (auto& x : inc) x -= mean;
  return inc;
}

inline void check_search_bounds(const ScalarSearchOptions& search) {
  search.validate();
  if (!(search.lo > 0.0 && search.hi < 1.0)) {
    throw std::invalid_argument("Hurst search bounds must lie inside (0, 1)");
  }
}

}  // namespace detail

/// Full minimization result for Whittle's estimator.
inline ScalarMinimum fit_whittle(std::span<const double> series, const WhittleOptions& opts = {}) {
  validate(opts.model);
  detail::check_search_bounds(opts.search);
  const auto inc = detail::prepare_increments(series, opts.input_kind);
  const Periodogram pg = periodogram(inc);
  return minimize_scalar_bounded(
      [&](double h) { return whittle_objective(HurstParam{h}, pg, opts.model); }, opts.search);
}

/// Whittle estimate of H: the argmin of the objective over the search interval.
inline double estimate_hurst_whittle(std::span<const double> series,
                                     const WhittleOptions& opts = {}) {
  return fit_whittle(series, opts).argmin;
}

}  // namespace hurst
