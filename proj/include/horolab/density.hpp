// Density traces and the Rogers-Taylor-Tricot sandwich verdicts. The upper
// and lower psi-densities are unreachable limits; their finite-horizon
// proxies are window statistics (max for limsup, min for liminf) over
// dyadic t-windows, and the 0-vs-infinity dichotomy manifests as drift of
// the deepest window against the earliest one.

#pragma once

#include <vector>

#include "horolab/errors.hpp"
#include "horolab/gauge.hpp"
#include "horolab/measure.hpp"
#include "horolab/trace.hpp"

namespace horolab {

// value(t) = log mu(B(eta, e^{-t})) - log psi(e^{-t})
DensityTrace density_trace(const AtomicMeasure& mu, const GaugeSpec& g,
                           const BoundaryPoint& eta, const std::vector<double>& t_grid);

enum class RttMode { Hausdorff, Packing };
enum class RttVerdict { Zero, Infinite, FiniteCompatible, Undecided };

const char* to_string(RttVerdict v);

struct RttResult {
  RttVerdict verdict = RttVerdict::Undecided;
  double drift_low = 0.0;   // lower-quantile window drift across traces
  double drift_high = 0.0;  // upper-quantile window drift
  double band = 0.0;        // upper-quantile max-min oscillation
  int usable_traces = 0;
  int windows = 0;
};

// Requires >= 20 traces with at least two resolvable dyadic windows each.
// Hausdorff mode: drift of per-window maxima; up-drift >= margin -> Zero
// (upper density blows up), down-drift <= -margin -> Infinite. Packing mode
// uses window minima with the same sign convention (up -> Zero). Traces in
// a bounded band give FiniteCompatible; conflicting or weak trends give
// Undecided.
RttResult rtt_verdict(const std::vector<DensityTrace>& traces, RttMode mode,
                      double margin = 2.0);

}  // namespace horolab
