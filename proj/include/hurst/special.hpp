#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hurst {

/// Natural log of the gamma function for x > 0.
inline double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::domain_error("log_gamma: argument must be finite and positive, got " +
                            std::to_string(x));
  }
  return std::lgamma(x);
}

/**
 * Hurwitz zeta function, zeta(s, q) = sum_{j >= 0} (j + q)^{-s}.
 *
 * Euler-Maclaurin summation: the first 12 terms explicitly, then the
 * integral tail, the half-term, and Bernoulli corrections B2..B12 at
 * a = q + 12. For s in (1, 4] and q in (0, 1] the truncation error is
 * below 1e-16 relative.
 */
inline double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw std::domain_error("hurwitz_zeta: s must exceed 1 (series diverges), got " +
                            std::to_string(s));
  }
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::domain_error("hurwitz_zeta: q must be positive, got " + std::to_string(q));
  }

  constexpr int kLeading = 12;
  // B_{2k} / (2k)! for k = 1..6
  constexpr std::array<double, 6> kBernoulliOverFactorial = {
      1.0 / 6.0 / 2.0,
      -1.0 / 30.0 / 24.0,
      1.0 / 42.0 / 720.0,
      -1.0 / 30.0 / 40320.0,
      5.0 / 66.0 / 3628800.0,
      -691.0 / 2730.0 / 479001600.0,
  };

  double sum = 0.0;
  for (int j = kLeading - 1; j >= 0; --j) {
    sum += std::pow(q + j, -s);
  }

  const double a = q + kLeading;
  const double a_pow = std::pow(a, -s);
  sum += a * a_pow / (s - 1.0);
  sum += 0.5 * a_pow;

  // term_k = (s)_{2k-1} a^{-s-2k+1}, built incrementally
  const double inv_a2 = 1.0 / (a * a);
  double rising = s;
  double power = a_pow / a;
  double correction = 0.0;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    correction += kBernoulliOverFactorial[k] * rising * power;
    const double m = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + m) * (s + m + 1.0);
    power *= inv_a2;
  }
  return sum + correction;
}

}  // namespace hurst
