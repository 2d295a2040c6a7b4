#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ssig/diagnostics.hpp"
#include "ssig/rng.hpp"
#include "ssig/sampling.hpp"

using ssig::RunReport;
using ssig::Signal;
using ssig::StationarityScore;
using ssig::TraceEntry;

namespace {

std::string temp_path(const char* stem) {
  return std::string("/tmp/ssig_diag_") + stem + "_" + std::to_string(::getpid()) + ".csv";
}

}  // namespace

TEST_CASE("iid noise scores as stationary") {
  ssig::Rng rng(51);
  const Signal x = ssig::gaussian_init(100000, 1.0, rng);
  const StationarityScore score = ssig::stationarity(x, 16);
  CHECK(score.window_count == 16);
  REQUIRE(score.window_means.size() == 16);
  REQUIRE(score.window_powers.size() == 16);
  // Window means of iid samples have sd sigma/sqrt(n/B); four of those is a
  // generous bound for the worst of 16 windows.
  const double bound = 4.0 * std::sqrt(16.0 / 100000.0);
  CHECK(score.mean_deviation <= bound);
  CHECK(score.power_ratio_deviation <= 0.2);
}

TEST_CASE("a dead half followed by a loud half is flagged") {
  // First half zeros, second half +/-0.5 alternating: global power 0.125,
  // per-window power 0 or 0.25, so the worst ratio deviation is 1.
  std::vector<double> v(1000, 0.0);
  for (std::size_t t = 500; t < 1000; ++t) v[t] = (t % 2 == 0) ? 0.5 : -0.5;
  const StationarityScore score = ssig::stationarity(Signal(std::move(v)), 10);
  CHECK(score.power_ratio_deviation == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(score.mean_deviation < 0.1);  // means stay near zero throughout
}

TEST_CASE("mean deviation ignores a constant offset") {
  ssig::Rng rng(52);
  std::vector<double> v(8192);
  for (auto& s : v) s = rng.gaussian();
  std::vector<double> shifted = v;
  for (auto& s : shifted) s += 100.0;

  const StationarityScore a = ssig::stationarity(Signal(std::move(v)), 8);
  const StationarityScore b = ssig::stationarity(Signal(std::move(shifted)), 8);
  // Centered and scaled by sigma, the mean deviation is offset-invariant up
  // to cancellation error in the large-offset moments.
  CHECK(b.mean_deviation == doctest::Approx(a.mean_deviation).epsilon(1e-4));
}

TEST_CASE("degenerate stationarity inputs are rejected") {
  CHECK_THROWS_AS((void)ssig::stationarity(Signal(std::vector<double>(100, 3.0)), 8),
                  std::invalid_argument);
  ssig::Rng rng(53);
  const Signal x = ssig::gaussian_init(16, 1.0, rng);
  CHECK_THROWS_AS((void)ssig::stationarity(x, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)ssig::stationarity(x, 17), std::invalid_argument);
}

TEST_CASE("empirical quantiles are the sorted values") {
  const Signal x(std::vector<double>{3.0, 1.0, 2.0});
  CHECK(ssig::empirical_quantiles(x) == std::vector<double>{1.0, 2.0, 3.0});

  const Signal sorted(std::vector<double>{-1.0, 0.0, 2.0});
  CHECK(ssig::empirical_quantiles(sorted) == sorted.values());

  ssig::Rng rng(54);
  const Signal noisy = ssig::gaussian_init(1000, 1.0, rng);
  const std::vector<double> q = ssig::empirical_quantiles(noisy);
  REQUIRE(q.size() == noisy.size());
  for (std::size_t i = 1; i < q.size(); ++i) CHECK(q[i] >= q[i - 1]);
  double sum_orig = 0.0;
  double sum_sorted = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    sum_orig += noisy.values()[i];
    sum_sorted += q[i];
  }
  CHECK(sum_sorted == doctest::Approx(sum_orig).epsilon(1e-12));
}

TEST_CASE("trace export writes a parseable CSV that round-trips") {
  RunReport report{.final_signal = Signal(std::vector<double>{0.0, 0.0}), .trace = {}};
  report.trace.push_back(TraceEntry{0.0, 0, 0.40000000000000002, 0.65000000000000013});
  report.trace.push_back(TraceEntry{0.125, 1000, 0.012345678901234567, 0.0123456789012345678});
  report.trace.push_back(TraceEntry{0.25, 2000, 1e-300, 0.0});

  const std::string path = temp_path("roundtrip");
  ssig::export_trace(report, path);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "elapsed_seconds,step,metric_d,total_loss");

  for (const TraceEntry& expected : report.trace) {
    std::string line;
    REQUIRE(std::getline(in, line));
    for (auto& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream ss(line);
    double t = 0.0;
    std::uint64_t step = 0;
    double d = 0.0;
    double loss = 0.0;
    REQUIRE((ss >> t >> step >> d >> loss));
    CHECK(t == expected.elapsed_seconds);
    CHECK(step == expected.step);
    CHECK(d == expected.metric_d);
    CHECK(loss == expected.total_loss);
  }
  std::string extra;
  CHECK_FALSE(std::getline(in, extra));
  std::remove(path.c_str());
}

TEST_CASE("empty traces export as a bare header") {
  RunReport report{.final_signal = Signal(std::vector<double>{0.0, 0.0}), .trace = {}};
  const std::string path = temp_path("empty");
  ssig::export_trace(report, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "elapsed_seconds,step,metric_d,total_loss");
  std::string extra;
  CHECK_FALSE(std::getline(in, extra));
  std::remove(path.c_str());
}

TEST_CASE("unwritable export paths raise an error naming the path") {
  RunReport report{.final_signal = Signal(std::vector<double>{0.0, 0.0}), .trace = {}};
  try {
    ssig::export_trace(report, "/nonexistent_dir_ssig/trace.csv");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent_dir_ssig/trace.csv") != std::string::npos);
  }
}
