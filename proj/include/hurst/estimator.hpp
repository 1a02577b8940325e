#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hurst/baselines.hpp"
#include "hurst/errors.hpp"
#include "hurst/series.hpp"
#include "hurst/spectral.hpp"
#include "hurst/tdml.hpp"
#include "hurst/whittle.hpp"

namespace hurst {

enum class Method { whittle, tdml, rs, higuchi, dfa, variogram };

/// Spectrum by name; K applies to truncation/paxson and defaults to 200/10.
inline SpectrumModel parse_spectrum(std::string_view name, std::optional<int> K = std::nullopt) {
  SpectrumModel model;
  if (name == "paxson") {
    model = FgnPaxson{K.value_or(10)};
  } else if (name == "truncation") {
    model = FgnTruncation{K.value_or(200)};
  } else if (name == "hurwitz") {
    model = FgnHurwitz{};
  } else if (name == "taylor") {
    model = FgnTaylor{};
  } else if (name == "arfima") {
    model = Arfima{};
  } else {
    throw std::invalid_argument("unknown spectrum '" + std::string(name) + "'");
  }
  validate(model);
  return model;
}

/// Outcome of one estimation: NaN value plus a tag when it failed.
struct EstimateOutcome {
  double value = std::numeric_limits<double>::quiet_NaN();
  std::string error;

  bool ok() const { return error.empty(); }
};

/**
 * An estimator with its configuration, addressable by a short id:
 * `whittle[:spectrum[:K]]`, `tdml`, `rs`, `higuchi`, `dfa`, `variogram`.
 * Plain `whittle` means Paxson's spectrum with K = 10.
 */
struct EstimatorSpec {
  Method method = Method::whittle;
  SpectrumModel model = FgnPaxson{10};

  static EstimatorSpec parse(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
      const auto pos = text.find(':', start);
      parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    const auto name = parts[0];
    EstimatorSpec spec;
    if (name == "whittle") {
      spec.method = Method::whittle;
      if (parts.size() > 3) throw std::invalid_argument("bad estimator '" + std::string(text) + "'");
      if (parts.size() >= 2) {
        std::optional<int> K;
        if (parts.size() == 3) {
          try {
            std::size_t used = 0;
            K = std::stoi(std::string(parts[2]), &used);
            if (used != parts[2].size()) throw std::invalid_argument("K");
          } catch (const std::exception&) {
            throw std::invalid_argument("bad K in estimator '" + std::string(text) + "'");
          }
        }
        spec.model = parse_spectrum(parts[1], K);
      }
      return spec;
    }
    if (parts.size() != 1) throw std::invalid_argument("bad estimator '" + std::string(text) + "'");
    if (name == "tdml") {
      spec.method = Method::tdml;
    } else if (name == "rs") {
      spec.method = Method::rs;
    } else if (name == "higuchi") {
      spec.method = Method::higuchi;
    } else if (name == "dfa") {
      spec.method = Method::dfa;
    } else if (name == "variogram") {
      spec.method = Method::variogram;
    } else {
      throw std::invalid_argument("unknown estimator '" + std::string(text) + "'");
    }
    return spec;
  }

  std::string id() const {
    switch (method) {
      case Method::whittle: return "whittle:" + to_string(model);
      case Method::tdml: return "tdml";
      case Method::rs: return "rs";
      case Method::higuchi: return "higuchi";
      case Method::dfa: return "dfa";
      case Method::variogram: return "variogram";
    }
    return "?";
  }

  /// Throws on failure.
  double estimate(std::span<const double> values, InputKind kind) const {
    switch (method) {
      case Method::whittle: {
        WhittleOptions opts;
        opts.model = model;
        opts.input_kind = kind;
        return estimate_hurst_whittle(values, opts);
      }
      case Method::tdml: {
        TdmlOptions opts;
        opts.input_kind = kind;
        return estimate_hurst_tdml(values, opts);
      }
      default: break;
    }
    const auto path = to_path(values, kind);
    switch (method) {
      case Method::rs: return estimate_rs(path);
      case Method::higuchi: return estimate_higuchi(path);
      case Method::dfa: return estimate_dfa(path);
      case Method::variogram: return estimate_variogram(path);
      default: break;
    }
    throw std::logic_error("unhandled estimator");
  }

  /// Never throws on estimator failure; failures become a NaN with a tag.
  EstimateOutcome try_estimate(std::span<const double> values, InputKind kind) const {
    try {
      return {estimate(values, kind), {}};
    } catch (const degenerate_series&) {
      return {std::numeric_limits<double>::quiet_NaN(), "degenerate series"};
    } catch (const std::exception& e) {
      return {std::numeric_limits<double>::quiet_NaN(), e.what()};
    }
  }
};

}  // namespace hurst
