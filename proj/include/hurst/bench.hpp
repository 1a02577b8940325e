#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hurst/estimator.hpp"
#include "hurst/io.hpp"
#include "hurst/series.hpp"
#include "hurst/synth.hpp"

namespace hurst {

/// Which synthetic process feeds the benchmark. Both are handed to the
/// estimators as paths.
enum class BenchData { fbm, arfima };

struct BenchConfig {
  std::vector<std::size_t> lengths = {128, 256, 512, 1024, 2048, 4096, 8192, 16384, 32768};
  std::size_t samples = 100;
  std::vector<EstimatorSpec> methods = {EstimatorSpec{}};
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  BenchData data = BenchData::fbm;

  void validate() const {
    if (lengths.empty()) throw std::invalid_argument("bench: no lengths given");
    for (auto n : lengths) {
      if (n < 2) throw std::invalid_argument("bench: lengths must be >= 2");
    }
    if (samples < 1) throw std::invalid_argument("bench: samples must be >= 1");
    if (workers < 1) throw std::invalid_argument("bench: workers must be >= 1");
    if (methods.empty()) throw std::invalid_argument("bench: no methods given");
  }
};

struct EstimateRecord {
  std::string method;
  std::size_t n = 0;
  double h_true = 0.0;
  double h_est = std::numeric_limits<double>::quiet_NaN();
  double seconds = 0.0;
  std::string error;
};

struct LocalMetrics {
  double h = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  // NaN when count == 0
  double rmse = std::numeric_limits<double>::quiet_NaN();
  double bias = std::numeric_limits<double>::quiet_NaN();
  double stddev = std::numeric_limits<double>::quiet_NaN();
};

struct TimingRow {
  std::string method;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t workers = 0;
  double total_seconds = 0.0;
  double per_sequence_seconds = 0.0;
};

/// Per-sequence time t = w T / m for T elapsed over a bin of m sequences on w workers.
inline double per_sequence_seconds(double total_seconds, std::size_t workers, std::size_t samples) {
  return static_cast<double>(workers) * total_seconds / static_cast<double>(samples);
}

/// RMSE over records with a finite estimate; NaN if there are none.
inline double global_rmse(std::span<const EstimateRecord> records) {
  double ss = 0.0;
  std::size_t used = 0;
  for (const auto& r : records) {
    if (!std::isfinite(r.h_est)) continue;
    const double e = r.h_est - r.h_true;
    ss += e * e;
    ++used;
  }
  return used == 0 ? std::numeric_limits<double>::quiet_NaN()
                   : std::sqrt(ss / static_cast<double>(used));
}

inline double failure_rate(std::span<const EstimateRecord> records) {
  if (records.empty()) return 0.0;
  const auto failed = std::count_if(records.begin(), records.end(),
                                    [](const EstimateRecord& r) { return !std::isfinite(r.h_est); });
  return static_cast<double>(failed) / static_cast<double>(records.size());
}

/**
 * Windowed error metrics on the grid h = 0, 0.001, ..., 1 (1001 points), each
 * over records with true H in [h - dh, h + dh]. Population convention:
 * stddev divides by count, so rmse^2 = bias^2 + stddev^2.
 */
inline std::vector<LocalMetrics> local_metrics(std::span<const EstimateRecord> records,
                                               double dh = 0.05) {
  struct Point {
    double truth;
    double err;
  };
  std::vector<Point> pts;
  for (const auto& r : records) {
    if (std::isfinite(r.h_est)) pts.push_back({r.h_true, r.h_est - r.h_true});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.truth < b.truth || (a.truth == b.truth && a.err < b.err);
  });

  constexpr std::size_t kGridPoints = 1001;
  std::vector<LocalMetrics> out(kGridPoints);
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    auto& m = out[i];
    m.h = static_cast<double>(i) / 1000.0;
    m.lo = m.h - dh;
    m.hi = m.h + dh;
    const auto first = std::lower_bound(pts.begin(), pts.end(), m.lo,
                                        [](const Point& p, double v) { return p.truth < v; });
    const auto last = std::upper_bound(pts.begin(), pts.end(), m.hi,
                                       [](double v, const Point& p) { return v < p.truth; });
    m.count = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, last - first));
    if (m.count == 0) continue;
    const double c = static_cast<double>(m.count);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (auto it = first; it != last; ++it) {
      sum += it->err;
      sum_sq += it->err * it->err;
    }
    m.bias = sum / c;
    m.rmse = std::sqrt(sum_sq / c);
    double centered = 0.0;
    for (auto it = first; it != last; ++it) centered += (it->err - m.bias) * (it->err - m.bias);
    m.stddev = std::sqrt(centered / c);
  }
  return out;
}

/// Records grouped by (method, bin), in config order; each group holds
/// exactly `samples` records in sample order.
struct BenchResult {
  BenchConfig config;
  std::vector<std::vector<std::vector<EstimateRecord>>> records;  // [method][bin][sample]

  std::span<const EstimateRecord> bin(std::size_t method, std::size_t bin_index) const {
    return records.at(method).at(bin_index);
  }

  std::vector<TimingRow> timings() const {
    std::vector<TimingRow> rows;
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
      for (std::size_t bi = 0; bi < config.lengths.size(); ++bi) {
        double summed = 0.0;
        for (const auto& r : records[mi][bi]) summed += r.seconds;
        TimingRow row;
        row.method = config.methods[mi].id();
        row.n = config.lengths[bi];
        row.samples = config.samples;
        row.workers = config.workers;
        // Summed per-call time across workers, expressed as the elapsed time
        // of a perfectly parallel bin.
        row.total_seconds = summed / static_cast<double>(config.workers);
        row.per_sequence_seconds = per_sequence_seconds(row.total_seconds, row.workers, row.samples);
        rows.push_back(row);
      }
    }
    return rows;
  }
};

/// Synthetic path for sample `sample` of bin `bin_index`; the stream depends
/// only on (seed, bin, sample). Returns the drawn H.
inline double draw_bench_path(const BenchConfig& cfg, std::size_t bin_index, std::size_t sample,
                              std::vector<double>& path) {
  auto rng = gaussian_rng(cfg.seed, static_cast<std::uint64_t>(bin_index) * cfg.samples + sample);
  double h = 0.0;
  while (h == 0.0) h = rng.uniform();
  const std::size_t n = cfg.lengths[bin_index];
  const auto inc = cfg.data == BenchData::fbm ? davies_harte_fgn(HurstParam{h}, n, 1.0, rng)
                                              : arfima_series(HurstParam{h}, n, n, 1.0, rng);
  path = cumulative_sum(inc);
  return h;
}

/**
 * Monte-Carlo benchmark: for each length, draw `samples` pairs (H ~ U(0,1),
 * synthetic path) and run every configured estimator on every path. Work is
 * split over `workers` threads by (bin, sample) task; results do not depend
 * on the worker count.
 */
inline BenchResult run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  BenchResult result;
  result.config = cfg;
  const std::size_t n_methods = cfg.methods.size();
  const std::size_t n_bins = cfg.lengths.size();
  result.records.assign(n_methods, std::vector<std::vector<EstimateRecord>>(
                                       n_bins, std::vector<EstimateRecord>(cfg.samples)));
  std::vector<std::string> ids;
  for (const auto& m : cfg.methods) ids.push_back(m.id());

  const std::size_t n_tasks = n_bins * cfg.samples;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    std::vector<double> path;
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= n_tasks) return;
      const std::size_t bi = task / cfg.samples;
      const std::size_t si = task % cfg.samples;
      try {
        const double h = draw_bench_path(cfg, bi, si, path);
        for (std::size_t mi = 0; mi < n_methods; ++mi) {
          const auto start = std::chrono::steady_clock::now();
          auto outcome = cfg.methods[mi].try_estimate(path, InputKind::path);
          const auto stop = std::chrono::steady_clock::now();
          auto& rec = result.records[mi][bi][si];
          rec.method = ids[mi];
          rec.n = cfg.lengths[bi];
          rec.h_true = h;
          rec.h_est = outcome.value;
          rec.error = std::move(outcome.error);
          rec.seconds = std::chrono::duration<double>(stop - start).count();
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n_tasks);
        return;
      }
    }
  };

  if (cfg.workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(cfg.workers);
    for (std::size_t w = 0; w < cfg.workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

/// Writes global.csv, local.csv and timings.csv into `dir`; returns their paths.
inline std::vector<std::filesystem::path> write_bench_outputs(const BenchResult& result,
                                                              const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& cfg = result.config;
  auto open = [](const std::filesystem::path& p) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return out;
  };

  const auto global_path = dir / "global.csv";
  const auto local_path = dir / "local.csv";
  const auto timing_path = dir / "timings.csv";
  {
    auto out = open(global_path);
    out << "method,n,samples,rmse,failure_rate\n";
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      for (std::size_t bi = 0; bi < cfg.lengths.size(); ++bi) {
        const auto recs = result.bin(mi, bi);
        out << cfg.methods[mi].id() << ',' << cfg.lengths[bi] << ',' << cfg.samples << ','
            << format_optional(global_rmse(recs)) << ',' << format_double(failure_rate(recs))
            << '\n';
      }
    }
  }
  {
    auto out = open(local_path);
    out << "method,n,h,count,rmse,bias,std\n";
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      for (std::size_t bi = 0; bi < cfg.lengths.size(); ++bi) {
        for (const auto& m : local_metrics(result.bin(mi, bi))) {
          out << cfg.methods[mi].id() << ',' << cfg.lengths[bi] << ',' << format_double(m.h) << ','
              << m.count << ',' << format_optional(m.rmse) << ',' << format_optional(m.bias) << ','
              << format_optional(m.stddev) << '\n';
        }
      }
    }
  }
  {
    auto out = open(timing_path);
    out << "method,n,samples,workers,total_seconds,per_sequence_seconds\n";
    for (const auto& t : result.timings()) {
      out << t.method << ',' << t.n << ',' << t.samples << ',' << t.workers << ','
          << format_double(t.total_seconds) << ',' << format_double(t.per_sequence_seconds) << '\n';
    }
  }
  return {global_path, local_path, timing_path};
}

struct SlidingEstimate {
  std::size_t start = 0;
  double h_est = std::numeric_limits<double>::quiet_NaN();
  std::string error;
};

/// Estimates on every full window [i, i + window_len), i = 0, stride, ...;
/// a trailing partial window is dropped.
inline std::vector<SlidingEstimate> apply_sliding(std::span<const double> values, InputKind kind,
                                                  std::size_t window_len, std::size_t stride,
                                                  const EstimatorSpec& method) {
  if (stride < 1) throw std::invalid_argument("sliding: stride must be >= 1");
  if (window_len < 1 || window_len > values.size()) {
    throw std::invalid_argument("sliding: window length must be in [1, series length]");
  }
  std::vector<SlidingEstimate> out;
  for (std::size_t start = 0; start + window_len <= values.size(); start += stride) {
    auto outcome = method.try_estimate(values.subspan(start, window_len), kind);
    out.push_back({start, outcome.value, std::move(outcome.error)});
  }
  return out;
}

inline std::vector<SlidingEstimate> apply_sliding(const Series& series, std::size_t window_len,
                                                  std::size_t stride, const EstimatorSpec& method) {
  return apply_sliding(series.values, series.kind, window_len, stride, method);
}

}  // namespace hurst
