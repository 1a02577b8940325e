// Command-line front end: generate, estimate, bench, sliding.
//
// Exit codes: 0 success, 1 computation error, 2 usage error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hurst/hurst.hpp"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct EstimatorFlags {
  std::string method = "whittle";
  std::string spectrum = "paxson";
  std::optional<int> K;
  std::string input_kind = "path";
  std::string input;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--method", method, "Estimator")
        ->check(CLI::IsMember({"whittle", "tdml", "rs", "higuchi", "dfa", "variogram"}))
        ->capture_default_str();
    cmd.add_option("--spectrum", spectrum, "Spectrum model for whittle")
        ->check(CLI::IsMember({"paxson", "hurwitz", "truncation", "taylor", "arfima"}))
        ->capture_default_str();
    cmd.add_option("--K", K, "Truncation order (default 10 for paxson, 200 for truncation)")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--input-kind", input_kind, "Whether the input is a path or its increments")
        ->check(CLI::IsMember({"path", "increments"}))
        ->capture_default_str();
    cmd.add_option("--input", input, "Series CSV (single column `value`, optional header)")
        ->required();
  }

  hurst::EstimatorSpec spec() const {
    auto s = hurst::EstimatorSpec::parse(method);
    if (s.method == hurst::Method::whittle) s.model = hurst::parse_spectrum(spectrum, K);
    return s;
  }
};

int run_generate(const hurst::GenSpec& spec, const std::string& out, bool prepend_zero) {
  auto series = hurst::generate(spec);
  if (prepend_zero && series.kind == hurst::InputKind::path) {
    series.values.insert(series.values.begin(), 0.0);
  }
  if (out.empty()) {
    hurst::write_series_csv(std::cout, series.values);
  } else {
    hurst::write_series_csv(out, series.values);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurst exponent estimation toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic series as CSV");
  std::string gen_model = "fbm";
  hurst::GenSpec gen_spec;
  std::string gen_out;
  bool prepend_zero = false;
  gen->add_option("--model", gen_model, "Process to sample")
      ->check(CLI::IsMember({"fbm", "fgn", "arfima"}))
      ->capture_default_str();
  gen->add_option("--hurst", gen_spec.hurst, "Hurst exponent in (0, 1)")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--n", gen_spec.n, "Series length")->required()->check(CLI::Range(2, 1 << 30));
  gen->add_option("--seed", gen_spec.seed, "RNG seed")->capture_default_str();
  gen->add_option("--sigma", gen_spec.sigma, "Scale")->capture_default_str()->check(
      CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "Output file (default: standard output)");
  gen->add_flag("--prepend-zero", prepend_zero, "Start an fbm path with an explicit 0");

  // estimate
  auto* est = app.add_subcommand("estimate", "Estimate H of a series; prints H_est=<value>");
  EstimatorFlags est_flags;
  est_flags.add_to(*est);

  // bench
  auto* bench = app.add_subcommand("bench", "Monte-Carlo benchmark on synthetic paths");
  std::vector<std::size_t> lengths = {128, 256, 512, 1024, 2048, 4096, 8192, 16384, 32768};
  std::size_t samples = 100;
  std::vector<std::string> methods = {"whittle"};
  std::size_t workers = 1;
  std::uint64_t bench_seed = 0;
  std::string bench_out;
  std::string bench_data = "fbm";
  bench->add_option("--lengths", lengths, "Series lengths (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--samples", samples, "Samples per length bin")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--methods", methods,
                    "Estimators, comma separated: whittle[:spectrum[:K]], tdml, rs, higuchi, dfa, "
                    "variogram")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--workers", workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Master seed")->capture_default_str();
  bench->add_option("--data", bench_data, "Synthetic process")
      ->check(CLI::IsMember({"fbm", "arfima"}))
      ->capture_default_str();
  bench->add_option("--out", bench_out, "Output directory for global/local/timings CSV")
      ->required();

  // sliding
  auto* sliding = app.add_subcommand("sliding", "Estimates on sliding windows, CSV to stdout");
  EstimatorFlags sl_flags;
  std::size_t window = 0;
  std::size_t stride = 0;
  sliding->add_option("--window", window, "Window length")->required()->check(CLI::PositiveNumber);
  sliding->add_option("--stride", stride, "Step between window starts")
      ->required()
      ->check(CLI::PositiveNumber);
  sl_flags.add_to(*sliding);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // Flag combinations CLI11 cannot check on its own.
  hurst::EstimatorSpec est_spec;
  std::vector<hurst::EstimatorSpec> bench_methods;
  try {
    if (*est) est_spec = est_flags.spec();
    if (*sliding) est_spec = sl_flags.spec();
    if (*bench) {
      for (const auto& m : methods) bench_methods.push_back(hurst::EstimatorSpec::parse(m));
    }
    if (*gen) {
      gen_spec.model = hurst::parse_gen_model(gen_model);
      gen_spec.validate();
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen) return run_generate(gen_spec, gen_out, prepend_zero);

    if (*est) {
      const auto values = hurst::read_series_csv(est_flags.input);
      const double h = est_spec.estimate(values, hurst::parse_input_kind(est_flags.input_kind));
      std::cout << "H_est=" << hurst::format_double(h) << '\n';
      return 0;
    }

    if (*bench) {
      hurst::BenchConfig cfg;
      cfg.lengths = lengths;
      cfg.samples = samples;
      cfg.methods = bench_methods;
      cfg.workers = workers;
      cfg.seed = bench_seed;
      cfg.data = bench_data == "arfima" ? hurst::BenchData::arfima : hurst::BenchData::fbm;
      const auto result = hurst::run_benchmark(cfg);
      for (const auto& p : hurst::write_bench_outputs(result, bench_out)) {
        std::cout << "wrote=" << p.string() << '\n';
      }
      return 0;
    }

    if (*sliding) {
      const auto values = hurst::read_series_csv(sl_flags.input);
      const auto rows = hurst::apply_sliding(values, hurst::parse_input_kind(sl_flags.input_kind),
                                             window, stride, est_spec);
      std::cout << "start,h_est,error\n";
      for (const auto& r : rows) {
        std::cout << r.start << ',' << hurst::format_optional(r.h_est) << ','
                  << hurst::csv_field(r.error) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}
