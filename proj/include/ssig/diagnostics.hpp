#ifndef SSIG_DIAGNOSTICS_HPP
#define SSIG_DIAGNOSTICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ssig/report.hpp"
#include "ssig/types.hpp"

namespace ssig {

// Windowed drift score: partitions x into B equal contiguous windows
// (dropping up to B-1 trailing samples) and reports the worst window-mean
// and window-power excursions relative to the kept range's global stats.
// Degenerate (constant / zero-variance) signals are rejected.
StationarityScore stationarity(const Signal& x, std::size_t window_count);

// Values of x sorted ascending; entry k is the k/n empirical quantile.
std::vector<double> empirical_quantiles(const Signal& x);

// Trace as CSV: elapsed_seconds,step,metric_d,total_loss with a header row.
// Numbers are written with 17 significant digits so a parse round-trips
// exactly. I/O failures are reported with the path in the message.
void export_trace(const RunReport& report, const std::string& path);

}  // namespace ssig

#endif  // SSIG_DIAGNOSTICS_HPP
