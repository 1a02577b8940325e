#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "hurst/special.hpp"

namespace hurst {

/// Hurst exponent, strictly inside (0, 1).
class HurstParam {
 public:
  explicit HurstParam(double h) : h_(h) {
    if (!(h > 0.0 && h < 1.0)) {
      throw std::domain_error("Hurst exponent must lie in (0, 1), got " + std::to_string(h));
    }
  }

  double value() const noexcept { return h_; }
  /// Spectral exponent s = 2H + 1.
  double s() const noexcept { return 2.0 * h_ + 1.0; }

 private:
  double h_;
};

// Spectrum models. The four fGn variants differ only in how the aliased sum
// sum_k |2 pi k + lambda|^{-s} is evaluated.

struct FgnTruncation {
  int K = 200;
};
struct FgnPaxson {
  int K = 10;
};
struct FgnHurwitz {};
struct FgnTaylor {};
struct Arfima {};

using SpectrumModel = std::variant<FgnTruncation, FgnPaxson, FgnHurwitz, FgnTaylor, Arfima>;

inline void validate(const SpectrumModel& model) {
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FgnTruncation> || std::is_same_v<M, FgnPaxson>) {
          if (m.K < 1) {
            throw std::invalid_argument("truncation order K must be >= 1, got " +
                                        std::to_string(m.K));
          }
        }
      },
      model);
}

inline std::string to_string(const SpectrumModel& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FgnTruncation>) return "truncation:" + std::to_string(m.K);
        if constexpr (std::is_same_v<M, FgnPaxson>) return "paxson:" + std::to_string(m.K);
        if constexpr (std::is_same_v<M, FgnHurwitz>) return "hurwitz";
        if constexpr (std::is_same_v<M, FgnTaylor>) return "taylor";
        if constexpr (std::is_same_v<M, Arfima>) return "arfima";
      },
      model);
}

inline bool is_fgn(const SpectrumModel& model) { return !std::holds_alternative<Arfima>(model); }

namespace detail {

inline void check_frequency(double lambda) {
  if (!(lambda > 0.0 && lambda <= std::numbers::pi)) {
    throw std::domain_error("spectral density: frequency must lie in (0, pi], got " +
                            std::to_string(lambda));
  }
}

inline double truncated_alias_sum(double lambda, double s, int K) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double sum = std::pow(lambda, -s);
  for (int k = K; k >= 1; --k) {
    sum += std::pow(two_pi * k + lambda, -s) + std::pow(two_pi * k - lambda, -s);
  }
  return sum;
}

inline double paxson_tail(double lambda, double s, double h, int k) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return (std::pow(two_pi * k + lambda, 1.0 - s) + std::pow(two_pi * k - lambda, 1.0 - s)) /
         (4.0 * std::numbers::pi * h);
}

inline double hurwitz_alias_sum(double lambda, double s) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double q = lambda / two_pi;
  return (hurwitz_zeta(s, 1.0 - q) + hurwitz_zeta(s, q)) / std::pow(two_pi, s);
}

}  // namespace detail

/**
 * Spectral density of fractional Gaussian noise,
 *
 *   f(lambda) = (sigma2 / pi) Gamma(s) sin(pi H) (1 - cos lambda) sum_k |2 pi k + lambda|^{-s}
 *
 * with the aliased sum evaluated per `model`. FgnTaylor replaces the whole
 * expression by its low-frequency power law (sigma2 / pi) Gamma(s) sin(pi H) lambda^{1-2H}.
 */
inline std::vector<double> fgn_spectral_density(HurstParam hurst, std::span<const double> lambdas,
                                                double sigma2, const SpectrumModel& model) {
  if (!is_fgn(model)) {
    throw std::invalid_argument("fgn_spectral_density: model must be an fGn variant");
  }
  if (!(sigma2 > 0.0)) throw std::domain_error("fgn_spectral_density: sigma2 must be positive");
  validate(model);

  const double h = hurst.value();
  const double s = hurst.s();
  const double scale = sigma2 / std::numbers::pi * std::exp(log_gamma(s)) *
                       std::sin(std::numbers::pi * h);

  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    detail::check_frequency(lambda);
    if (std::holds_alternative<FgnTaylor>(model)) {
      out.push_back(scale * std::pow(lambda, 1.0 - 2.0 * h));
      continue;
    }
    double alias = 0.0;
    if (const auto* t = std::get_if<FgnTruncation>(&model)) {
      alias = detail::truncated_alias_sum(lambda, s, t->K);
    } else if (const auto* p = std::get_if<FgnPaxson>(&model)) {
      alias = detail::truncated_alias_sum(lambda, s, p->K) +
              0.5 * (detail::paxson_tail(lambda, s, h, p->K) +
                     detail::paxson_tail(lambda, s, h, p->K + 1));
    } else {
      alias = detail::hurwitz_alias_sum(lambda, s);
    }
    // 1 - cos(lambda), without cancellation at small lambda
    const double half_sin = std::sin(0.5 * lambda);
    out.push_back(scale * 2.0 * half_sin * half_sin * alias);
  }
  return out;
}

/// Spectral density of ARFIMA(0, H - 1/2, 0): (sigma2 / 2 pi) (2 sin(lambda/2))^{1-2H}.
inline std::vector<double> arfima_spectral_density(HurstParam hurst,
                                                   std::span<const double> lambdas,
                                                   double sigma2) {
  if (!(sigma2 > 0.0)) throw std::domain_error("arfima_spectral_density: sigma2 must be positive");
  const double exponent = 1.0 - 2.0 * hurst.value();
  const double scale = sigma2 / (2.0 * std::numbers::pi);
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    detail::check_frequency(lambda);
    out.push_back(scale * std::pow(2.0 * std::sin(0.5 * lambda), exponent));
  }
  return out;
}

/// Density for any model; dispatches to the fGn or ARFIMA form.
inline std::vector<double> spectral_density(HurstParam hurst, std::span<const double> lambdas,
                                            double sigma2, const SpectrumModel& model) {
  if (std::holds_alternative<Arfima>(model)) return arfima_spectral_density(hurst, lambdas, sigma2);
  return fgn_spectral_density(hurst, lambdas, sigma2, model);
}

/// Divides by the geometric mean so the result has unit geometric mean.
inline std::vector<double> normalize_by_geometric_mean(std::span<const double> values) {
  if (values.empty()) throw std::domain_error("normalize_by_geometric_mean: empty input");
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error("normalize_by_geometric_mean: values must be positive and finite");
    }
    log_sum += std::log(v);
  }
  const double log_mean = log_sum / static_cast<double>(values.size());
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(std::exp(std::log(v) - log_mean));
  return out;
}

/**
 * Autocovariance of unit-step fGn for lags 0..max_lag:
 * gamma(k) = sigma2/2 (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}).
 */
inline std::vector<double> fgn_autocovariance(HurstParam hurst, std::size_t max_lag,
                                              double sigma2 = 1.0) {
  if (!(sigma2 > 0.0)) throw std::domain_error("fgn_autocovariance: sigma2 must be positive");
  const double two_h = 2.0 * hurst.value();
  std::vector<double> powers(max_lag + 2);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    powers[k] = std::pow(static_cast<double>(k), two_h);
  }
  std::vector<double> gamma(max_lag + 1);
  gamma[0] = sigma2;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    gamma[k] = 0.5 * sigma2 * (powers[k + 1] - 2.0 * powers[k] + powers[k - 1]);
  }
  return gamma;
}

}  // namespace hurst
