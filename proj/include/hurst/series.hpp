#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hurst {

/// Increments are fGn-like (stationary); a path is their running sum (fBm-like).
enum class InputKind { increments, path };

inline std::string_view to_string(InputKind kind) {
  return kind == InputKind::path ? "path" : "increments";
}

inline InputKind parse_input_kind(std::string_view text) {
  if (text == "path") return InputKind::path;
  if (text == "increments") return InputKind::increments;
  throw std::invalid_argument("unknown input kind '" + std::string(text) + "'");
}

struct SeriesMeta {
  double hurst = 0.0;
  std::string model;
  std::uint64_t seed = 0;
};

struct Series {
  std::vector<double> values;
  InputKind kind = InputKind::increments;
  std::optional<SeriesMeta> meta;
};

/// Running sum. The first path value is the first increment unless
/// `prepend_zero` is set.
inline std::vector<double> cumulative_sum(std::span<const double> increments,
                                          bool prepend_zero = false) {
  std::vector<double> path;
  path.reserve(increments.size() + (prepend_zero ? 1 : 0));
  if (prepend_zero) path.push_back(0.0);
  double level = 0.0;
  for (double x : increments) {
    level += x;
    path.push_back(level);
  }
  return path;
}

/// First differences; one shorter than the input.
inline std::vector<double> first_difference(std::span<const double> path) {
  std::vector<double> inc;
  if (path.size() < 2) return inc;
  inc.reserve(path.size() - 1);
  for (std::size_t t = 1; t < path.size(); ++t) inc.push_back(path[t] - path[t - 1]);
  return inc;
}

inline Series path_from_increments(const Series& s, bool prepend_zero = false) {
  if (s.kind != InputKind::increments) {
    throw std::invalid_argument("path_from_increments: series is not increments");
  }
  return {cumulative_sum(s.values, prepend_zero), InputKind::path, s.meta};
}

/// Inverse of path_from_increments (without a prepended zero): the level
/// before the first sample is taken as zero, so the output keeps the input
/// length. Any true initial level ends up in the first increment.
inline Series increments_from_path(const Series& s) {
  if (s.kind != InputKind::path) {
    throw std::invalid_argument("increments_from_path: series is not a path");
  }
  if (s.values.empty()) return {{}, InputKind::increments, s.meta};
  std::vector<double> inc;
  inc.reserve(s.values.size());
  inc.push_back(s.values.front());
  for (std::size_t t = 1; t < s.values.size(); ++t) inc.push_back(s.values[t] - s.values[t - 1]);
  return {std::move(inc), InputKind::increments, s.meta};
}

/// True when every value equals the first up to a few ulps of the largest
/// magnitude. Such a series carries no usable variation.
inline bool is_effectively_constant(std::span<const double> values) {
  if (values.empty()) return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double scale = std::max(std::abs(*lo), std::abs(*hi));
  return *hi - *lo <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

/// Increments of a series of either kind, as consumed by the estimators.
/// A path of length n yields n - 1 increments.
inline std::vector<double> to_increments(std::span<const double> values, InputKind kind) {
  if (kind == InputKind::increments) return {values.begin(), values.end()};
  return first_difference(values);
}

/// Path of a series of either kind.
inline std::vector<double> to_path(std::span<const double> values, InputKind kind) {
  if (kind == InputKind::path) return {values.begin(), values.end()};
  return cumulative_sum(values);
}

}  // namespace hurst
