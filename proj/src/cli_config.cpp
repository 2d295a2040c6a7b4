#include "ssig/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "ssig/diagnostics.hpp"
#include "ssig/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ssig {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw config_error("config error: " + msg); }

std::string resolve_path(const std::string& p, const fs::path& base_dir) {
  fs::path fp(p);
  return fp.is_absolute() ? fp.string() : (base_dir / fp).string();
}

// ---- typed JSON extraction, with the full dotted key in every message ----

const json& require_key(const json& obj, const std::string& section, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail("missing required key '" + (section.empty() ? key : section + "." + key) + "'");
  }
  return obj.at(key);
}

void check_keys(const json& obj, const std::string& section,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail("'" + section + "' must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end()) {
      fail("unknown key '" + section + "." + key + "'");
    }
  }
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail("'" + where + "' must be a number");
  return v.get<double>();
}

std::uint64_t as_uint(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  fail("'" + where + "' must be a nonnegative integer");
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail("'" + where + "' must be a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) fail("'" + where + "' must be true or false");
  return v.get<bool>();
}

double number_or(const json& obj, const std::string& section, const char* key, double dflt) {
  if (!obj.is_object() || !obj.contains(key)) return dflt;
  return as_number(obj.at(key), section + "." + key);
}

std::uint64_t uint_or(const json& obj, const std::string& section, const char* key,
                      std::uint64_t dflt) {
  if (!obj.is_object() || !obj.contains(key)) return dflt;
  return as_uint(obj.at(key), section + "." + key);
}

std::string string_or(const json& obj, const std::string& section, const char* key,
                      const std::string& dflt) {
  if (!obj.is_object() || !obj.contains(key)) return dflt;
  return as_string(obj.at(key), section + "." + key);
}

bool bool_or(const json& obj, const std::string& section, const char* key, bool dflt) {
  if (!obj.is_object() || !obj.contains(key)) return dflt;
  return as_bool(obj.at(key), section + "." + key);
}

Mode mode_from_string(const std::string& s, const std::string& where) {
  if (s == "interchange") return Mode::Interchange;
  if (s == "optimize") return Mode::OptimizationOnly;
  if (s == "combined") return Mode::Combined;
  fail("'" + where + "' must be one of interchange, optimize, combined (got '" + s + "')");
}

// ---- input file readers ----

// Strips a trailing '#' comment and turns commas into spaces; returns false
// for lines with no content left.
bool clean_data_line(std::string& line) {
  const std::size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  std::replace(line.begin(), line.end(), ',', ' ');
  return line.find_first_not_of(" \t\r") != std::string::npos;
}

std::vector<std::pair<double, double>> read_two_column(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open input file '" + path + "'");
  std::vector<std::pair<double, double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!clean_data_line(line)) continue;
    std::istringstream ss(line);
    double a = 0.0;
    double b = 0.0;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) {
      fail(path + ":" + std::to_string(lineno) + ": expected two numeric columns");
    }
    rows.emplace_back(a, b);
  }
  if (rows.empty()) fail("input file '" + path + "' has no data rows");
  return rows;
}

std::vector<double> read_one_column(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open input file '" + path + "'");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!clean_data_line(line)) continue;
    std::istringstream ss(line);
    double a = 0.0;
    std::string extra;
    if (!(ss >> a) || (ss >> extra)) {
      fail(path + ":" + std::to_string(lineno) + ": expected a single numeric column");
    }
    values.push_back(a);
  }
  if (values.empty()) fail("input file '" + path + "' has no data rows");
  return values;
}

// First column must run 0, 1, 2, ... so the second column is indexed by
// lag (or frequency bin) with no gaps.
std::vector<double> contiguous_second_column(const std::vector<std::pair<double, double>>& rows,
                                             const std::string& path, const char* index_name) {
  std::vector<double> values;
  values.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double idx = rows[i].first;
    if (std::abs(idx - static_cast<double>(i)) > 1e-9) {
      fail("'" + path + "': " + index_name + " column must be contiguous from 0 (row " +
           std::to_string(i + 1) + " has " + std::to_string(idx) + ")");
    }
    values.push_back(rows[i].second);
  }
  return values;
}

ExactPdf parse_exact_pdf(const json& sec, const fs::path& base_dir) {
  check_keys(sec, "pdf.exact", {"type", "lower", "upper", "path"});
  const std::string type = as_string(require_key(sec, "pdf.exact", "type"), "pdf.exact.type");
  try {
    if (type == "uniform") {
      const double lo = as_number(require_key(sec, "pdf.exact", "lower"), "pdf.exact.lower");
      const double hi = as_number(require_key(sec, "pdf.exact", "upper"), "pdf.exact.upper");
      if (!(lo < hi)) fail("'pdf.exact': lower must be < upper");
      const double c = 1.0 / (hi - lo);
      return ExactPdf({lo, hi}, {c, c});
    }
    if (type == "file") {
      const std::string path = resolve_path(
          as_string(require_key(sec, "pdf.exact", "path"), "pdf.exact.path"), base_dir);
      auto rows = read_two_column(path);
      std::vector<double> xs;
      std::vector<double> ds;
      xs.reserve(rows.size());
      ds.reserve(rows.size());
      for (auto& [x, d] : rows) {
        xs.push_back(x);
        ds.push_back(d);
      }
      return ExactPdf(std::move(xs), std::move(ds));
    }
  } catch (const std::invalid_argument& e) {
    fail("'pdf.exact': " + std::string(e.what()));
  }
  fail("'pdf.exact.type' must be uniform or file (got '" + type + "')");
}

}  // namespace

json load_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw config_error("config error: cannot open config file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t k = 0; k < upto; ++k) {
      if (text[k] == '\n') ++line;
    }
    throw config_error(path + ":" + std::to_string(line) + ": " + e.what());
  }
}

void apply_overrides(json& cfg, const std::vector<std::string>& overrides) {
  for (const std::string& ov : overrides) {
    const std::size_t eq = ov.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail("override '" + ov + "' must look like section.key=value");
    }
    const std::string path = ov.substr(0, eq);
    const std::string raw = ov.substr(eq + 1);

    json value;
    try {
      value = json::parse(raw);
    } catch (const json::parse_error&) {
      value = raw;  // bare words are strings
    }

    std::vector<std::string> segments;
    std::size_t start = 0;
    for (;;) {
      const std::size_t dot = path.find('.', start);
      const std::string seg = path.substr(start, dot - start);
      if (seg.empty()) fail("override path '" + path + "' has an empty segment");
      segments.push_back(seg);
      if (dot == std::string::npos) break;
      start = dot + 1;
    }

    json* node = &cfg;
    try {
      for (std::size_t k = 0; k + 1 < segments.size(); ++k) {
        node = &((*node)[segments[k]]);
      }
      (*node)[segments.back()] = value;
    } catch (const json::type_error&) {
      fail("override path '" + path + "' crosses a non-object value");
    }
  }
}

TargetAutocorr parse_target(const json& section, const fs::path& base_dir) {
  if (!section.is_object()) fail("'target' must be an object");
  const std::string family =
      as_string(require_key(section, "target", "family"), "target.family");

  try {
    if (family == "exp_decay" || family == "damped_cosine") {
      check_keys(section, "target", {"family", "power", "tau", "freq", "m"});
      const double power = as_number(require_key(section, "target", "power"), "target.power");
      const double tau = as_number(require_key(section, "target", "tau"), "target.tau");
      const std::uint64_t m = as_uint(require_key(section, "target", "m"), "target.m");
      if (!(power > 0.0)) fail("'target.power' must be positive");
      if (!(tau > 0.0)) fail("'target.tau' must be positive");
      if (m < 1) fail("'target.m' must be at least 1");
      double freq = 0.0;
      if (family == "damped_cosine") {
        freq = as_number(require_key(section, "target", "freq"), "target.freq");
      } else if (section.contains("freq")) {
        fail("'target.freq' only applies to the damped_cosine family");
      }
      std::vector<double> values(m);
      for (std::uint64_t k = 0; k < m; ++k) {
        const double decay = power * std::exp(-static_cast<double>(k) / tau);
        values[k] = family == "exp_decay"
                        ? decay
                        : decay * std::cos(2.0 * std::numbers::pi * freq *
                                           static_cast<double>(k));
      }
      return TargetAutocorr(std::move(values));
    }
    if (family == "autocorr_file") {
      check_keys(section, "target", {"family", "path"});
      const std::string path = resolve_path(
          as_string(require_key(section, "target", "path"), "target.path"), base_dir);
      return TargetAutocorr(contiguous_second_column(read_two_column(path), path, "lag"));
    }
    if (family == "psd_file") {
      check_keys(section, "target", {"family", "path", "m"});
      const std::string path = resolve_path(
          as_string(require_key(section, "target", "path"), "target.path"), base_dir);
      const std::uint64_t m = as_uint(require_key(section, "target", "m"), "target.m");
      if (m < 1) fail("'target.m' must be at least 1");
      const std::vector<double> psd =
          contiguous_second_column(read_two_column(path), path, "frequency bin");
      return psd_to_autocorr(psd, m);
    }
  } catch (const std::invalid_argument& e) {
    fail("'target': " + std::string(e.what()));
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const config_error*>(&e)) throw;
    fail("'target': " + std::string(e.what()));
  }
  fail("'target.family' must be one of exp_decay, damped_cosine, autocorr_file, psd_file "
       "(got '" + family + "')");
}

AppConfig interpret_config(const json& cfg, const fs::path& base_dir, bool for_benchmark) {
  if (!cfg.is_object()) fail("top level must be an object");
  check_keys(cfg, "config",
             {"run", "target", "pdf", "loss", "optimizer", "output", "benchmark"});
  if (!cfg.contains("run")) fail("missing required section 'run'");
  if (!cfg.contains("target")) fail("missing required section 'target'");

  AppConfig app;

  // run
  const json& run = cfg.at("run");
  check_keys(run, "run",
             {"mode", "n", "steps", "budget_seconds", "seed", "swaps_per_gradient_step",
              "trace_interval", "trace_clock", "stationarity_windows", "init_sigma",
              "init_from_pdf", "resync_accepted_interval", "cdf_grid"});
  app.run.mode = mode_from_string(as_string(require_key(run, "run", "mode"), "run.mode"),
                                  "run.mode");
  const std::uint64_t n = as_uint(require_key(run, "run", "n"), "run.n");
  if (n < 2) fail("'run.n' must be at least 2");
  app.n = static_cast<std::size_t>(n);

  app.run.steps = uint_or(run, "run", "steps", 0);
  app.run.budget_seconds = number_or(run, "run", "budget_seconds", 0.0);
  if (run.contains("steps") && app.run.steps < 1) fail("'run.steps' must be at least 1");
  if (run.contains("budget_seconds") && !(app.run.budget_seconds > 0.0)) {
    fail("'run.budget_seconds' must be positive");
  }
  if (!for_benchmark && !run.contains("steps") && !run.contains("budget_seconds")) {
    fail("'run' needs 'steps' or 'budget_seconds'");
  }

  app.run.rng_seed = uint_or(run, "run", "seed", 0);
  app.run.swaps_per_gradient_step = uint_or(run, "run", "swaps_per_gradient_step", 1);
  app.run.trace_interval = uint_or(run, "run", "trace_interval", 1000);
  if (app.run.trace_interval < 1) fail("'run.trace_interval' must be at least 1");

  // Default trace clock: wall time when the stop rule is a wall budget
  // (convergence-vs-time plots), otherwise none so outputs byte-reproduce.
  const std::string clock = string_or(run, "run", "trace_clock",
                                      app.run.budget_seconds > 0.0 ? "wall" : "none");
  if (clock == "wall") {
    app.run.trace_clock = TraceClock::Wall;
  } else if (clock == "none") {
    app.run.trace_clock = TraceClock::None;
  } else {
    fail("'run.trace_clock' must be wall or none (got '" + clock + "')");
  }

  const std::uint64_t windows = uint_or(run, "run", "stationarity_windows", 16);
  if (windows < 2) fail("'run.stationarity_windows' must be at least 2");
  app.run.stationarity_windows = static_cast<std::size_t>(windows);

  app.run.init_sigma = number_or(run, "run", "init_sigma", 0.0);
  if (run.contains("init_sigma") && !(app.run.init_sigma > 0.0)) {
    fail("'run.init_sigma' must be positive");
  }
  app.run.init_from_pdf = bool_or(run, "run", "init_from_pdf", false);
  app.run.resync_accepted_interval = uint_or(run, "run", "resync_accepted_interval", 1'000'000);
  if (app.run.resync_accepted_interval < 1) {
    fail("'run.resync_accepted_interval' must be at least 1");
  }
  const std::uint64_t grid = uint_or(run, "run", "cdf_grid", 4096);
  if (grid < 2) fail("'run.cdf_grid' must be at least 2");
  app.run.cdf_grid = static_cast<std::size_t>(grid);

  // optimizer
  if (cfg.contains("optimizer")) {
    const json& opt = cfg.at("optimizer");
    check_keys(opt, "optimizer", {"alpha", "beta1", "beta2", "epsilon"});
    app.run.adam.alpha = number_or(opt, "optimizer", "alpha", app.run.adam.alpha);
    app.run.adam.beta1 = number_or(opt, "optimizer", "beta1", app.run.adam.beta1);
    app.run.adam.beta2 = number_or(opt, "optimizer", "beta2", app.run.adam.beta2);
    app.run.adam.epsilon = number_or(opt, "optimizer", "epsilon", app.run.adam.epsilon);
    if (!(app.run.adam.alpha > 0.0)) fail("'optimizer.alpha' must be positive");
    if (!(app.run.adam.beta1 >= 0.0 && app.run.adam.beta1 < 1.0)) {
      fail("'optimizer.beta1' must be in [0, 1)");
    }
    if (!(app.run.adam.beta2 >= 0.0 && app.run.adam.beta2 < 1.0)) {
      fail("'optimizer.beta2' must be in [0, 1)");
    }
    if (!(app.run.adam.epsilon > 0.0)) fail("'optimizer.epsilon' must be positive");
  }

  // target
  app.target = parse_target(cfg.at("target"), base_dir);
  if (app.target->lags() > app.n) {
    fail("'target': lag count " + std::to_string(app.target->lags()) +
         " exceeds run.n = " + std::to_string(app.n));
  }

  // loss (penalty weight + optional per-lag metric weights)
  double penalty_weight = 1.0;
  if (cfg.contains("loss")) {
    const json& loss = cfg.at("loss");
    check_keys(loss, "loss", {"weight", "lag_weights_path"});
    penalty_weight = number_or(loss, "loss", "weight", 1.0);
    if (!(penalty_weight > 0.0)) fail("'loss.weight' must be positive");
    if (loss.contains("lag_weights_path")) {
      const std::string path = resolve_path(
          as_string(loss.at("lag_weights_path"), "loss.lag_weights_path"), base_dir);
      std::vector<double> w = read_one_column(path);
      if (w.size() != app.target->lags()) {
        fail("'loss.lag_weights_path': " + std::to_string(w.size()) +
             " weights for " + std::to_string(app.target->lags()) + " target lags");
      }
      try {
        app.metric = MetricConfig(std::move(w));
      } catch (const std::invalid_argument& e) {
        fail("'loss.lag_weights_path': " + std::string(e.what()));
      }
    }
  }

  // pdf
  if (cfg.contains("pdf")) {
    const json& pdf = cfg.at("pdf");
    check_keys(pdf, "pdf", {"exact", "range"});
    if (pdf.contains("exact")) {
      app.exact_pdf = parse_exact_pdf(pdf.at("exact"), base_dir);
    }
    if (pdf.contains("range")) {
      const json& range = pdf.at("range");
      check_keys(range, "pdf.range", {"lower", "upper"});
      const double lo = as_number(require_key(range, "pdf.range", "lower"), "pdf.range.lower");
      const double hi = as_number(require_key(range, "pdf.range", "upper"), "pdf.range.upper");
      try {
        app.penalty = RangePenalty(lo, hi, penalty_weight);
      } catch (const std::invalid_argument& e) {
        fail("'pdf.range': " + std::string(e.what()));
      }
    }
  }

  // benchmark
  if (for_benchmark) {
    if (!cfg.contains("benchmark")) fail("missing required section 'benchmark'");
    const json& bench = cfg.at("benchmark");
    check_keys(bench, "benchmark",
               {"modes", "seeds", "steps", "budget_seconds", "thresholds", "parallel",
                "output_dir", "sweep"});
    BenchmarkConfig bc;

    const json& modes = require_key(bench, "benchmark", "modes");
    if (!modes.is_array() || modes.empty()) {
      fail("'benchmark.modes' must be a nonempty array");
    }
    for (const json& mj : modes) {
      bc.modes.push_back(
          mode_from_string(as_string(mj, "benchmark.modes"), "benchmark.modes"));
    }

    const json& seeds = require_key(bench, "benchmark", "seeds");
    if (!seeds.is_array() || seeds.empty()) {
      fail("'benchmark.seeds' must be a nonempty array");
    }
    for (const json& sj : seeds) bc.seeds.push_back(as_uint(sj, "benchmark.seeds"));

    bc.steps = uint_or(bench, "benchmark", "steps", 0);
    bc.budget_seconds = number_or(bench, "benchmark", "budget_seconds", 0.0);
    if (bench.contains("steps") && bc.steps < 1) fail("'benchmark.steps' must be at least 1");
    if (bench.contains("budget_seconds") && !(bc.budget_seconds > 0.0)) {
      fail("'benchmark.budget_seconds' must be positive");
    }
    if (bc.steps == 0 && bc.budget_seconds == 0.0) {
      fail("'benchmark' needs 'steps' or 'budget_seconds'");
    }

    if (bench.contains("thresholds")) {
      const json& th = bench.at("thresholds");
      if (!th.is_array()) fail("'benchmark.thresholds' must be an array");
      for (const json& tj : th) {
        const double t = as_number(tj, "benchmark.thresholds");
        if (!(t > 0.0)) fail("'benchmark.thresholds' entries must be positive");
        bc.thresholds.push_back(t);
      }
    }

    bc.parallel = bool_or(bench, "benchmark", "parallel", false);
    const std::string dir = string_or(bench, "benchmark", "output_dir", "");
    bc.output_dir = dir.empty() ? dir : resolve_path(dir, base_dir);

    if (bench.contains("sweep")) {
      const json& sweep = bench.at("sweep");
      check_keys(sweep, "benchmark.sweep",
                 {"n_values", "m", "power", "tau", "min_seconds_per_point"});
      SweepConfig sc;
      if (sweep.contains("n_values")) {
        const json& nv = sweep.at("n_values");
        if (!nv.is_array() || nv.size() < 2) {
          fail("'benchmark.sweep.n_values' must be an array of at least 2 sizes");
        }
        sc.n_values.clear();
        for (const json& vj : nv) {
          const std::uint64_t v = as_uint(vj, "benchmark.sweep.n_values");
          if (v < 2) fail("'benchmark.sweep.n_values' entries must be at least 2");
          sc.n_values.push_back(static_cast<std::size_t>(v));
        }
      }
      sc.m = static_cast<std::size_t>(uint_or(sweep, "benchmark.sweep", "m", 512));
      if (sc.m < 1) fail("'benchmark.sweep.m' must be at least 1");
      sc.power = number_or(sweep, "benchmark.sweep", "power", 0.2);
      sc.tau = number_or(sweep, "benchmark.sweep", "tau", 100.0);
      if (!(sc.power > 0.0)) fail("'benchmark.sweep.power' must be positive");
      if (!(sc.tau > 0.0)) fail("'benchmark.sweep.tau' must be positive");
      sc.min_seconds_per_point =
          number_or(sweep, "benchmark.sweep", "min_seconds_per_point", 0.25);
      if (!(sc.min_seconds_per_point > 0.0)) {
        fail("'benchmark.sweep.min_seconds_per_point' must be positive");
      }
      for (std::size_t v : sc.n_values) {
        if (sc.m > v) {
          fail("'benchmark.sweep': m = " + std::to_string(sc.m) +
               " exceeds swept n = " + std::to_string(v));
        }
      }
      bc.sweep = std::move(sc);
    }
    app.benchmark = std::move(bc);
  }

  // Mode-specific requirements (union over benchmark modes).
  bool needs_exact = false;
  bool needs_range = false;
  const auto mode_needs = [&](Mode m) {
    if (m == Mode::Interchange) {
      needs_exact = true;
    } else {
      needs_range = true;
    }
  };
  if (for_benchmark) {
    for (Mode m : app.benchmark->modes) mode_needs(m);
  } else {
    mode_needs(app.run.mode);
  }
  if (app.run.init_from_pdf) needs_exact = true;
  if (needs_exact && !app.exact_pdf) {
    fail("interchange mode or init_from_pdf requires a 'pdf.exact' section");
  }
  if (needs_range && !app.penalty) {
    fail("optimize/combined modes require a 'pdf.range' section");
  }

  // output
  if (cfg.contains("output")) {
    const json& out = cfg.at("output");
    check_keys(out, "output",
               {"signal_csv", "signal_bin", "trace_csv", "quantiles_csv", "initial_csv"});
    const auto path_or_empty = [&](const char* key) {
      const std::string p = string_or(out, "output", key, "");
      return p.empty() ? p : resolve_path(p, base_dir);
    };
    app.out.signal_csv = path_or_empty("signal_csv");
    app.out.signal_bin = path_or_empty("signal_bin");
    app.out.trace_csv = path_or_empty("trace_csv");
    app.out.quantiles_csv = path_or_empty("quantiles_csv");
    app.out.initial_csv = path_or_empty("initial_csv");
  }

  return app;
}

// ---- serialization ----

namespace {

void write_values_csv(const std::vector<double>& values, const std::string& path,
                      const char* what) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error(std::string(what) + ": cannot open '" + path + "' for writing");
  }
  char buf[64];
  for (double v : values) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    out << buf;
  }
  if (!out) throw std::runtime_error(std::string(what) + ": write to '" + path + "' failed");
}

}  // namespace

void write_signal_csv(const Signal& x, const std::string& path) {
  write_values_csv(x.values(), path, "write_signal_csv");
}

void write_quantiles_csv(const Signal& x, const std::string& path) {
  write_values_csv(empirical_quantiles(x), path, "write_quantiles_csv");
}

static_assert(std::endian::native == std::endian::little,
              "signal binary format is little-endian; byte swapping is not implemented");
static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559,
              "signal binary format requires IEEE-754 64-bit doubles");

void write_signal_bin(const Signal& x, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_signal_bin: cannot open '" + path + "' for writing");
  }
  out.write("SSIG1", 5);
  const std::uint64_t n = x.size();
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(x.values().data()),
            static_cast<std::streamsize>(n * sizeof(double)));
  if (!out) throw std::runtime_error("write_signal_bin: write to '" + path + "' failed");
}

Signal read_signal_bin(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_signal_bin: cannot open '" + path + "'");
  char magic[5] = {};
  in.read(magic, 5);
  if (!in || std::string(magic, 5) != "SSIG1") {
    throw std::runtime_error("read_signal_bin: '" + path + "' is not a signal file");
  }
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  if (!in) throw std::runtime_error("read_signal_bin: '" + path + "' is truncated");
  std::vector<double> values(n);
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(n * sizeof(double)));
  if (!in || static_cast<std::uint64_t>(in.gcount()) != n * sizeof(double)) {
    throw std::runtime_error("read_signal_bin: '" + path + "' is truncated");
  }
  return Signal(std::move(values));
}

}  // namespace ssig
