#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hurst/fft.hpp"
#include "hurst/series.hpp"
#include "hurst/spectral.hpp"

namespace hurst {

/**
 * Seeded stream of uniform and standard normal deviates.
 *
 * The engine is a 64-bit Mersenne twister seeded from (seed, stream_index)
 * through std::seed_seq, so each index gives its own stream. Uniforms use the
 * top 53 bits of one engine draw. Normals use Marsaglia's polar method; the
 * second deviate of each accepted pair is cached and returned next.
 */
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t stream_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_index),
                      static_cast<std::uint32_t>(stream_index >> 32), 0x5eedu};
    engine_.seed(seq);
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline GaussianStream gaussian_rng(std::uint64_t seed, std::uint64_t stream_index) {
  return GaussianStream(seed, stream_index);
}

enum class GenModel { fgn, fbm, arfima };

inline std::string_view to_string(GenModel m) {
  switch (m) {
    case GenModel::fgn: return "fgn";
    case GenModel::fbm: return "fbm";
    case GenModel::arfima: return "arfima";
  }
  return "?";
}

inline GenModel parse_gen_model(std::string_view text) {
  if (text == "fgn") return GenModel::fgn;
  if (text == "fbm") return GenModel::fbm;
  if (text == "arfima") return GenModel::arfima;
  throw std::invalid_argument("unknown generator model '" + std::string(text) + "'");
}

struct GenSpec {
  GenModel model = GenModel::fbm;
  double hurst = 0.5;
  std::size_t n = 1024;
  std::uint64_t seed = 0;
  double sigma = 1.0;

  void validate() const {
    if (n < 2) throw std::invalid_argument("generator length must be >= 2");
    HurstParam{hurst};
    if (!(sigma > 0.0)) throw std::invalid_argument("generator sigma must be positive");
  }
};

/**
 * Exact fGn sample by circulant embedding (Davies-Harte).
 *
 * The first row [g0, g1, ..., g(n-1), g(n), g(n-1), ..., g1] of a 2n x 2n
 * circulant is diagonalized by the DFT. Complex Gaussian amplitudes with
 * variance eigenvalue / (4n), made Hermitian, are transformed back; the
 * first n real parts have the fGn covariance exactly. Draws 2n normals.
 */
inline std::vector<double> davies_harte_fgn(HurstParam hurst, std::size_t n, double sigma,
                                            GaussianStream& rng) {
  if (n < 2) throw std::invalid_argument("davies_harte_fgn: length must be >= 2");
  const auto gamma = fgn_autocovariance(hurst, n);
  const std::size_t m = 2 * n;
  std::vector<cplx> row(m);
  for (std::size_t k = 0; k <= n; ++k) row[k] = gamma[k];
  for (std::size_t k = 1; k < n; ++k) row[m - k] = gamma[k];

  const FftPlan plan(m);
  plan.forward(row);

  double max_eig = 0.0;
  for (const auto& e : row) max_eig = std::max(max_eig, e.real());
  std::vector<double> eig(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double e = row[k].real();
    if (e < -1e-9 * max_eig) {
      throw std::runtime_error("davies_harte_fgn: embedding not nonnegative-definite (eigenvalue " +
                               std::to_string(e) + " at index " + std::to_string(k) + ")");
    }
    eig[k] = std::max(e, 0.0);
  }

  const double md = static_cast<double>(m);
  std::vector<cplx> amp(m);
  amp[0] = std::sqrt(eig[0] / md) * rng.normal();
  amp[n] = std::sqrt(eig[n] / md) * rng.normal();
  for (std::size_t k = 1; k < n; ++k) {
    const double scale = std::sqrt(eig[k] / (2.0 * md));
    const double re = rng.normal();
    const double im = rng.normal();
    amp[k] = {scale * re, scale * im};
    amp[m - k] = std::conj(amp[k]);
  }
  // Unnormalized transform; the Hermitian input makes the output real.
  plan.forward(amp);

  std::vector<double> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = amp[t].real();
  if (sigma != 1.0) {
    for (auto& x : out) x *= sigma;
  }
  return out;
}

inline Series generate_fgn_davies_harte(const GenSpec& spec) {
  spec.validate();
  auto rng = gaussian_rng(spec.seed, 0);
  return {davies_harte_fgn(HurstParam{spec.hurst}, spec.n, spec.sigma, rng), InputKind::increments,
          SeriesMeta{spec.hurst, "fgn", spec.seed}};
}

/// MA(infinity) weights of (1 - B)^{-d}: psi_0 = 1, psi_j = psi_{j-1} (j - 1 + d) / j.
inline std::vector<double> arfima_ma_weights(double d, std::size_t count) {
  std::vector<double> psi(count);
  if (count == 0) return psi;
  psi[0] = 1.0;
  for (std::size_t j = 1; j < count; ++j) {
    psi[j] = psi[j - 1] * (static_cast<double>(j) - 1.0 + d) / static_cast<double>(j);
  }
  return psi;
}

/**
 * ARFIMA(0, d, 0) with d = H - 1/2, as a truncated moving average of i.i.d.
 * normals: x_t = sum_{j=0}^{min(t, trunc)} psi_j e_{t-j}. The first `trunc`
 * outputs are burn-in and discarded. The filter is applied by FFT
 * convolution; d = 0 returns the driving noise unchanged.
 */
inline std::vector<double> arfima_series(HurstParam hurst, std::size_t n, std::size_t trunc,
                                         double sigma, GaussianStream& rng) {
  const double d = hurst.value() - 0.5;
  if (!(std::abs(d) < 0.5)) throw std::domain_error("arfima: |d| must be below 1/2");
  const std::size_t total = trunc + n;
  std::vector<double> noise(total);
  for (auto& e : noise) e = rng.normal();

  std::vector<double> out(n);
  if (d == 0.0) {
    for (std::size_t t = 0; t < n; ++t) out[t] = noise[trunc + t];
  } else {
    const auto psi = arfima_ma_weights(d, trunc + 1);
    // Circular convolution of length >= trunc + n leaves indices
    // [trunc, trunc + n) free of wrap-around.
    const std::size_t m = std::bit_ceil(total);
    std::vector<cplx> a(m);
    std::vector<cplx> b(m);
    for (std::size_t i = 0; i < total; ++i) a[i] = noise[i];
    for (std::size_t j = 0; j < psi.size(); ++j) b[j] = psi[j];
    const FftPlan plan(m);
    plan.forward(a);
    plan.forward(b);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    plan.inverse(a);
    for (std::size_t t = 0; t < n; ++t) out[t] = a[trunc + t].real();
  }
  if (sigma != 1.0) {
    for (auto& x : out) x *= sigma;
  }
  return out;
}

inline Series generate_arfima(const GenSpec& spec, std::optional<std::size_t> trunc = std::nullopt) {
  spec.validate();
  auto rng = gaussian_rng(spec.seed, 0);
  return {arfima_series(HurstParam{spec.hurst}, spec.n, trunc.value_or(spec.n), spec.sigma, rng),
          InputKind::increments, SeriesMeta{spec.hurst, "arfima", spec.seed}};
}

/// Dispatches on spec.model; fbm yields the running sum of Davies-Harte fGn.
inline Series generate(const GenSpec& spec) {
  switch (spec.model) {
    case GenModel::fgn: return generate_fgn_davies_harte(spec);
    case GenModel::arfima: return generate_arfima(spec);
    case GenModel::fbm: {
      auto s = path_from_increments(generate_fgn_davies_harte(spec));
      s.meta->model = "fbm";
      return s;
    }
  }
  throw std::invalid_argument("generate: unknown model");
}

}  // namespace hurst
