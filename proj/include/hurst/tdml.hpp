#pragma once

#include <cmath>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hurst/optimize.hpp"
#include "hurst/series.hpp"
#include "hurst/spectral.hpp"
#include "hurst/whittle.hpp"

namespace hurst {

/// One-step prediction results of the Durbin-Levinson recursion.
/// Index t (0-based) refers to observation y[t] given y[0..t-1].
struct DurbinLevinsonTrace {
  std::vector<double> predictions;  // eta_t
  std::vector<double> variances;    // v_t, with v_0 = gamma(0)
  std::vector<double> reflections;  // phi_{t,t} for t >= 1; reflections[0] unused (0)
};

/**
 * Reusable buffers for the Durbin-Levinson recursion. Cost is O(n^2) per
 * run. Not thread-safe; use one workspace per thread.
 */
class DurbinLevinson {
 public:
  /// Runs the recursion on autocovariances gamma[0..n-1] against data y,
  /// calling visit(t, eta_t, v_t, phi_tt) for every t.
  template <typename Visit>
  void run(std::span<const double> gamma, std::span<const double> y, Visit&& visit,
           double hurst_for_errors = std::nan("")) {
    const std::size_t n = y.size();
    if (gamma.size() < n) throw std::invalid_argument("durbin_levinson: need n autocovariances");
    if (n == 0) return;
    phi_.assign(n, 0.0);
    next_.assign(n, 0.0);
    // Reversed copies keep the inner loop running forward through memory:
    // g_rev[n-i] = gamma[i] (g_rev[0] is padding), y_rev[n-1-i] = y[i].
    g_rev_.assign(n + 1, 0.0);
    y_rev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      g_rev_[n - i] = gamma[i];
      y_rev_[n - 1 - i] = y[i];
    }

    double v = gamma[0];
    check_variance(v, 0, hurst_for_errors);
    visit(std::size_t{0}, 0.0, v, 0.0);
    if (n == 1) return;

    // One pass per order k updates phi and accumulates both the prediction
    // eta_k and the numerator of the next reflection coefficient.
    double acc = gamma[1];
    for (std::size_t k = 1; k < n; ++k) {
      const double kappa = acc / v;
      // gamma(k + 1 - j) for j = 1..k sits at g_rev[n-1-k+j]; y[k-j] at y_rev[n-1-k+j]
      const double* g = g_rev_.data() + (n - 1 - k);
      const double* yr = y_rev_.data() + (n - 1 - k);
      const double* phi = phi_.data();
      double* next = next_.data();
      double eta = 0.0;
      double dot = 0.0;
#pragma omp simd reduction(+ : eta, dot)
      for (std::size_t j = 1; j < k; ++j) {
        const double p = phi[j - 1] - kappa * phi[k - j - 1];
        next[j - 1] = p;
        eta += p * yr[j];
        dot += p * g[j];
      }
      next_[k - 1] = kappa;
      eta += kappa * yr[k];
      phi_.swap(next_);

      v *= (1.0 - kappa) * (1.0 + kappa);
      check_variance(v, k, hurst_for_errors);
      visit(k, eta, v, kappa);
      if (k + 1 < n) acc = gamma[k + 1] - dot - kappa * g[k];
    }
  }

  DurbinLevinsonTrace trace(std::span<const double> gamma, std::span<const double> y) {
    DurbinLevinsonTrace out;
    out.predictions.reserve(y.size());
    out.variances.reserve(y.size());
    out.reflections.reserve(y.size());
    run(gamma, y, [&](std::size_t, double eta, double v, double kappa) {
      out.predictions.push_back(eta);
      out.variances.push_back(v);
      out.reflections.push_back(kappa);
    });
    return out;
  }

  /**
   * Concentrated Gaussian negative log-likelihood of demeaned increments y
   * under unit-variance fGn with exponent H, the innovation variance being
   * profiled out:
   *
   *   1/2 [ sum_t log v_t + n log( (1/n) sum_t (y_t - eta_t)^2 / v_t ) ]
   */
  double nll(HurstParam hurst, std::span<const double> y) {
    const std::size_t n = y.size();
    if (n == 0) throw std::invalid_argument("durbin_levinson_nll: empty series");
    const auto gamma = fgn_autocovariance(hurst, n - 1, 1.0);
    double sum_log = 0.0;
    double sum_sq = 0.0;
    run(
        gamma, y,
        [&](std::size_t t, double eta, double v, double) {
          const double e = y[t] - eta;
          sum_log += std::log(v);
          sum_sq += e * e / v;
        },
        hurst.value());
    const double nd = static_cast<double>(n);
    return 0.5 * (sum_log + nd * std::log(sum_sq / nd));
  }

 private:
  static void check_variance(double v, std::size_t t, double hurst) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "durbin_levinson: prediction variance " << v << " not positive at t = " << t
          << " (H = " << hurst << ")";
      throw std::runtime_error(msg.str());
    }
  }

  std::vector<double> phi_;
  std::vector<double> next_;
  std::vector<double> g_rev_;
  std::vector<double> y_rev_;
};

inline double durbin_levinson_nll(HurstParam hurst, std::span<const double> y) {
  DurbinLevinson dl;
  return dl.nll(hurst, y);
}

struct TdmlOptions {
  ScalarSearchOptions search = default_hurst_search();
  InputKind input_kind = InputKind::path;
};

inline ScalarMinimum fit_tdml(std::span<const double> series, const TdmlOptions& opts = {}) {
  detail::check_search_bounds(opts.search);
  const auto inc = detail::prepare_increments(series, opts.input_kind);
  DurbinLevinson dl;
  return minimize_scalar_bounded([&](double h) { return dl.nll(HurstParam{h}, inc); },
                                 opts.search);
}

/// Time-domain maximum likelihood estimate of H.
inline double estimate_hurst_tdml(std::span<const double> series, const TdmlOptions& opts = {}) {
  return fit_tdml(series, opts).argmin;
}

}  // namespace hurst
