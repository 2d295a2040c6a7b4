#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssig/bench.hpp"
#include "ssig/cli.hpp"
#include "ssig/diagnostics.hpp"
#include "ssig/interchange.hpp"
#include "ssig/pipeline.hpp"
#include "ssig/sampling.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ssig {

namespace {

const char* mode_to_string(Mode m) {
  switch (m) {
    case Mode::Interchange:
      return "interchange";
    case Mode::OptimizationOnly:
      return "optimize";
    case Mode::Combined:
      return "combined";
  }
  return "?";
}

void print_kv(const char* key, double v) { std::printf("%s: %.17g\n", key, v); }
void print_kv(const std::string& key, double v) { print_kv(key.c_str(), v); }
void print_kv(const char* key, std::uint64_t v) {
  std::printf("%s: %" PRIu64 "\n", key, v);
}
void print_kv(const char* key, const char* v) { std::printf("%s: %s\n", key, v); }

fs::path config_base_dir(const std::string& config_path) {
  const fs::path parent = fs::path(config_path).parent_path();
  return parent.empty() ? fs::path(".") : parent;
}

// Tabulates the density once up front so a renormalization warning reaches
// the user before a long run starts.
void warn_on_renormalization(const AppConfig& app) {
  if (!app.exact_pdf) return;
  const TabulatedCdf cdf = integrate_pdf(*app.exact_pdf, app.run.cdf_grid);
  if (cdf.renorm_warning) {
    std::fprintf(stderr, "warning: density integrates to %.6g, not 1; renormalized\n",
                 cdf.mass);
  }
}

RunReport dispatch_run(const AppConfig& app, const RunConfig& rc, Rng& rng,
                       Signal* initial_out) {
  switch (rc.mode) {
    case Mode::Interchange:
      return run_interchange(*app.target, *app.exact_pdf, app.n, rc, app.metric, rng,
                             initial_out);
    case Mode::OptimizationOnly:
      return run_optimization_only(*app.target, app.n, rc,
                                   LossConfig{app.metric, *app.penalty}, rng,
                                   app.exact_pdf ? &*app.exact_pdf : nullptr, initial_out);
    case Mode::Combined:
      return run_combined(*app.target, app.n, rc, LossConfig{app.metric, *app.penalty}, rng,
                          app.exact_pdf ? &*app.exact_pdf : nullptr, initial_out);
  }
  throw std::logic_error("dispatch_run: unknown mode");
}

void run_generate(const AppConfig& app) {
  warn_on_renormalization(app);

  Rng rng(app.run.rng_seed);
  Signal initial(std::vector<double>(2, 0.0));
  Signal* initial_out = app.out.initial_csv.empty() ? nullptr : &initial;

  const RunReport report = dispatch_run(app, app.run, rng, initial_out);

  if (initial_out) write_signal_csv(initial, app.out.initial_csv);
  if (!app.out.signal_csv.empty()) write_signal_csv(report.final_signal, app.out.signal_csv);
  if (!app.out.signal_bin.empty()) write_signal_bin(report.final_signal, app.out.signal_bin);
  if (!app.out.trace_csv.empty()) export_trace(report, app.out.trace_csv);
  if (!app.out.quantiles_csv.empty()) {
    write_quantiles_csv(report.final_signal, app.out.quantiles_csv);
  }

  double final_total_loss = report.final_metric;
  if (app.run.mode != Mode::Interchange) {
    final_total_loss += range_penalty_value(report.final_signal.values(), *app.penalty);
  }

  print_kv("mode", mode_to_string(app.run.mode));
  print_kv("n", static_cast<std::uint64_t>(app.n));
  print_kv("m", static_cast<std::uint64_t>(app.target->lags()));
  print_kv("seed", app.run.rng_seed);
  print_kv("steps_run", report.steps_run);
  print_kv("swaps_proposed", report.swaps_proposed);
  print_kv("swaps_accepted", report.swaps_accepted);
  print_kv("final_metric", report.final_metric);
  print_kv("final_total_loss", final_total_loss);
  print_kv("vaf_percent", report.vaf_percent);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  print_kv("stationarity_mean_deviation",
           report.stationarity ? report.stationarity->mean_deviation : nan);
  print_kv("stationarity_power_ratio_deviation",
           report.stationarity ? report.stationarity->power_ratio_deviation : nan);
  print_kv("elapsed_seconds", report.total_seconds);
}

double time_to_threshold(const RunReport& report, double threshold) {
  for (const TraceEntry& e : report.trace) {
    if (e.metric_d <= threshold) return e.elapsed_seconds;
  }
  return std::numeric_limits<double>::infinity();
}

void run_benchmark(const AppConfig& app) {
  const BenchmarkConfig& bc = *app.benchmark;
  warn_on_renormalization(app);
  if (!bc.output_dir.empty()) fs::create_directories(bc.output_dir);
  if (bc.parallel) {
    std::fprintf(stderr,
                 "note: parallel cells share cores; wall-clock comparisons are "
                 "indicative only\n");
  }

  struct CellKey {
    Mode mode;
    std::uint64_t seed;
  };
  std::vector<CellKey> cells;
  for (Mode mode : bc.modes) {
    for (std::uint64_t seed : bc.seeds) cells.push_back({mode, seed});
  }

  const auto run_cell = [&](CellKey key) {
    RunConfig rc = app.run;
    rc.mode = key.mode;
    rc.rng_seed = key.seed;
    rc.steps = bc.steps;
    rc.budget_seconds = bc.budget_seconds;
    rc.trace_clock = TraceClock::Wall;  // time-to-threshold needs timestamps
    Rng rng(key.seed);
    return dispatch_run(app, rc, rng, nullptr);
  };

  std::vector<RunReport> reports;
  reports.reserve(cells.size());
  if (bc.parallel) {
    std::vector<std::future<RunReport>> futures;
    futures.reserve(cells.size());
    for (CellKey key : cells) {
      futures.push_back(std::async(std::launch::async, run_cell, key));
    }
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (CellKey key : cells) reports.push_back(run_cell(key));
  }

  // Human-readable table on stderr, machine-readable key:value on stdout.
  std::fprintf(stderr, "%-12s %-8s %13s %10s %12s %12s", "mode", "seed", "final_metric",
               "vaf_pct", "steps_run", "elapsed_s");
  for (double th : bc.thresholds) std::fprintf(stderr, "  t_to(%8.3g)", th);
  std::fprintf(stderr, "\n");

  for (std::size_t c = 0; c < cells.size(); ++c) {
    const CellKey key = cells[c];
    const RunReport& report = reports[c];
    const std::string prefix =
        std::string("cell.") + mode_to_string(key.mode) + ".seed" + std::to_string(key.seed);

    if (!bc.output_dir.empty()) {
      const std::string trace_path =
          (fs::path(bc.output_dir) /
           (std::string("trace_") + mode_to_string(key.mode) + "_seed" +
            std::to_string(key.seed) + ".csv"))
              .string();
      export_trace(report, trace_path);
    }

    print_kv(prefix + ".final_metric", report.final_metric);
    print_kv(prefix + ".vaf_percent", report.vaf_percent);
    print_kv((prefix + ".steps_run").c_str(), report.steps_run);
    print_kv(prefix + ".elapsed_seconds", report.total_seconds);

    std::fprintf(stderr, "%-12s %-8" PRIu64 " %13.5g %10.4f %12" PRIu64 " %12.3f",
                 mode_to_string(key.mode), key.seed, report.final_metric,
                 report.vaf_percent, report.steps_run, report.total_seconds);
    for (double th : bc.thresholds) {
      const double t = time_to_threshold(report, th);
      char thkey[64];
      std::snprintf(thkey, sizeof(thkey), "%s.time_to_%g", prefix.c_str(), th);
      print_kv(thkey, t);
      std::fprintf(stderr, "  %13.3f", t);
    }
    std::fprintf(stderr, "\n");
  }

  if (bc.sweep) {
    const SweepConfig& sc = *bc.sweep;
    std::vector<double> target_values(sc.m);
    for (std::size_t k = 0; k < sc.m; ++k) {
      target_values[k] = sc.power * std::exp(-static_cast<double>(k) / sc.tau);
    }
    const TargetAutocorr sweep_target(std::move(target_values));
    const LossConfig sweep_loss{MetricConfig{},
                                app.penalty ? *app.penalty : RangePenalty(-0.5, 0.5, 1.0)};

    std::fprintf(stderr, "\n%-10s %22s %22s\n", "n", "gradient_step_seconds",
                 "swap_proposal_seconds");

    std::vector<double> ns;
    std::vector<double> gradient_times;
    std::vector<double> swap_times;
    for (std::size_t n : sc.n_values) {
      Rng rng(app.run.rng_seed + static_cast<std::uint64_t>(n));
      const ScalePoint point =
          measure_scale_point(sweep_target, sweep_loss, n, sc.min_seconds_per_point, rng);
      ns.push_back(static_cast<double>(n));
      gradient_times.push_back(point.gradient_step_seconds);
      swap_times.push_back(point.swap_proposal_seconds);

      const std::string prefix = "sweep.n" + std::to_string(n);
      print_kv(prefix + ".gradient_step_seconds", point.gradient_step_seconds);
      print_kv(prefix + ".swap_proposal_seconds", point.swap_proposal_seconds);
      std::fprintf(stderr, "%-10zu %22.6e %22.6e\n", n, point.gradient_step_seconds,
                   point.swap_proposal_seconds);
    }

    const double slope = fit_loglog_slope(ns, gradient_times);
    const double swap_ratio =
        *std::max_element(swap_times.begin(), swap_times.end()) /
        *std::min_element(swap_times.begin(), swap_times.end());
    print_kv("sweep.gradient_step_slope", slope);
    print_kv("sweep.swap_seconds_ratio", swap_ratio);
    std::fprintf(stderr,
                 "gradient step log-log slope: %.3f   swap time max/min ratio: %.3f\n",
                 slope, swap_ratio);
  }
}

int run_command(const std::string& config_path, const std::vector<std::string>& overrides,
                bool benchmark) {
  try {
    json cfg = load_config_file(config_path);
    apply_overrides(cfg, overrides);
    const AppConfig app = interpret_config(cfg, config_base_dir(config_path), benchmark);
    if (benchmark) {
      run_benchmark(app);
    } else {
      run_generate(app);
    }
    return 0;
  } catch (const config_error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const numeric_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace

int cmd_generate(const std::string& config_path, const std::vector<std::string>& overrides) {
  return run_command(config_path, overrides, false);
}

int cmd_benchmark(const std::string& config_path, const std::vector<std::string>& overrides) {
  return run_command(config_path, overrides, true);
}

}  // namespace ssig
