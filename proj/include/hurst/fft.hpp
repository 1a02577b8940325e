#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurst {

using cplx = std::complex<double>;

/**
 * Forward DFT plan for a fixed length n:
 *
 *   X[j] = sum_{t=0}^{n-1} x[t] exp(-2 pi i j t / n)
 *
 * Powers of two run an iterative radix-2 transform. Other lengths go through
 * Bluestein's chirp-z reformulation on a power-of-two convolution of size
 * >= 2n - 1. Tables are built in the constructor and never modified, so a
 * plan may be shared between threads.
 */
class FftPlan {
 public:
  explicit FftPlan(std::size_t n) : n_(n) {
    if (n < 1) throw std::invalid_argument("FftPlan: length must be positive");
    if (std::has_single_bit(n)) {
      build_radix2(n, twiddle_, bitrev_);
    } else {
      build_bluestein();
    }
  }

  std::size_t size() const noexcept { return n_; }

  /// In-place forward transform of exactly size() values.
  void forward(std::span<cplx> data) const {
    if (data.size() != n_) throw std::invalid_argument("FftPlan: length mismatch");
    if (conv_) {
      bluestein(data);
    } else {
      radix2(data, twiddle_, bitrev_);
    }
  }

  /// In-place inverse transform, normalized by 1/n.
  void inverse(std::span<cplx> data) const {
    for (auto& v : data) v = std::conj(v);
    forward(data);
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& v : data) v = std::conj(v) * scale;
  }

 private:
  static void build_radix2(std::size_t n, std::vector<cplx>& twiddle,
                           std::vector<std::size_t>& bitrev) {
    twiddle.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      twiddle[k] = {std::cos(angle), std::sin(angle)};
    }
    bitrev.resize(n);
    const int bits = std::countr_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
      bitrev[i] = r;
    }
  }

  static void radix2(std::span<cplx> a, const std::vector<cplx>& twiddle,
                     const std::vector<std::size_t>& bitrev) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i < bitrev[i]) std::swap(a[i], a[bitrev[i]]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n / len;
      for (std::size_t start = 0; start < n; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          const cplx u = a[start + k];
          const cplx v = a[start + k + half] * twiddle[k * stride];
          a[start + k] = u + v;
          a[start + k + half] = u - v;
        }
      }
    }
  }

  void build_bluestein() {
    m_ = std::bit_ceil(2 * n_ - 1);
    build_radix2(m_, conv_twiddle_, conv_bitrev_);
    chirp_.resize(n_);
    const std::size_t period = 2 * n_;
    for (std::size_t t = 0; t < n_; ++t) {
      // t^2 mod 2n keeps the angle argument small
      const std::size_t sq = (t * t) % period;
      const double angle = std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n_);
      chirp_[t] = {std::cos(angle), std::sin(angle)};
    }
    auto kernel = std::make_shared<std::vector<cplx>>(m_, cplx{});
    auto& k = *kernel;
    k[0] = chirp_[0];
    for (std::size_t t = 1; t < n_; ++t) {
      k[t] = chirp_[t];
      k[m_ - t] = chirp_[t];
    }
    radix2(k, conv_twiddle_, conv_bitrev_);
    conv_ = std::move(kernel);
  }

  void bluestein(std::span<cplx> data) const {
    std::vector<cplx> work(m_, cplx{});
    for (std::size_t t = 0; t < n_; ++t) work[t] = data[t] * std::conj(chirp_[t]);
    radix2(work, conv_twiddle_, conv_bitrev_);
    const auto& kernel = *conv_;
    for (std::size_t i = 0; i < m_; ++i) work[i] *= kernel[i];
    // inverse of size m via the conjugation identity
    for (auto& v : work) v = std::conj(v);
    radix2(work, conv_twiddle_, conv_bitrev_);
    const double scale = 1.0 / static_cast<double>(m_);
    for (std::size_t k = 0; k < n_; ++k) {
      data[k] = std::conj(work[k]) * scale * std::conj(chirp_[k]);
    }
  }

  std::size_t n_;
  std::vector<cplx> twiddle_;
  std::vector<std::size_t> bitrev_;

  // Bluestein state
  std::size_t m_ = 0;
  std::vector<cplx> chirp_;
  std::vector<cplx> conv_twiddle_;
  std::vector<std::size_t> conv_bitrev_;
  std::shared_ptr<const std::vector<cplx>> conv_;
};

namespace detail {

inline void check_signal(std::size_t n, bool finite) {
  if (n < 2) {
    throw std::invalid_argument("dft: need at least 2 samples, got " + std::to_string(n));
  }
  if (!finite) throw std::invalid_argument("dft: input contains non-finite values");
}

}  // namespace detail

inline std::vector<cplx> dft(std::span<const cplx> signal) {
  bool finite = true;
  for (const auto& v : signal) finite = finite && std::isfinite(v.real()) && std::isfinite(v.imag());
  detail::check_signal(signal.size(), finite);
  std::vector<cplx> out(signal.begin(), signal.end());
  FftPlan(out.size()).forward(out);
  return out;
}

inline std::vector<cplx> dft(std::span<const double> signal) {
  bool finite = true;
  for (double v : signal) finite = finite && std::isfinite(v);
  detail::check_signal(signal.size(), finite);
  std::vector<cplx> out(signal.begin(), signal.end());
  FftPlan(out.size()).forward(out);
  return out;
}

inline std::vector<cplx> inverse_dft(std::span<const cplx> spectrum) {
  bool finite = true;
  for (const auto& v : spectrum) finite = finite && std::isfinite(v.real()) && std::isfinite(v.imag());
  detail::check_signal(spectrum.size(), finite);
  std::vector<cplx> out(spectrum.begin(), spectrum.end());
  FftPlan(out.size()).inverse(out);
  return out;
}

/// Fourier frequencies 2 pi j / n (j = 1..floor(n/2)) and unnormalized
/// ordinates |X[j]|^2. The zero frequency is excluded; no mean is removed.
struct Periodogram {
  std::size_t n = 0;
  std::vector<double> frequencies;
  std::vector<double> ordinates;
};

inline std::vector<double> fourier_frequencies(std::size_t n) {
  std::vector<double> freqs(n / 2);
  for (std::size_t j = 1; j <= n / 2; ++j) {
    freqs[j - 1] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
  }
  return freqs;
}

inline Periodogram periodogram(std::span<const double> signal) {
  if (signal.size() < 4) {
    throw std::invalid_argument("periodogram: need at least 4 samples, got " +
                                std::to_string(signal.size()));
  }
  const auto spectrum = dft(signal);
  Periodogram pg;
  pg.n = signal.size();
  pg.frequencies = fourier_frequencies(pg.n);
  pg.ordinates.resize(pg.n / 2);
  for (std::size_t j = 1; j <= pg.n / 2; ++j) pg.ordinates[j - 1] = std::norm(spectrum[j]);
  return pg;
}

}  // namespace hurst
