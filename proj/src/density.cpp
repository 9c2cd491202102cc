#include "horolab/density.hpp"

#include <algorithm>
#include <cmath>

namespace horolab {

DensityTrace density_trace(const AtomicMeasure& mu, const GaugeSpec& g,
                           const BoundaryPoint& eta, const std::vector<double>& t_grid) {
  DensityTrace trace;
  trace.source = DensityTrace::Source::Empirical;
  double res = mu.resolution_scale();
  for (double t : t_grid) {
    if (!(t > 0.0)) throw std::domain_error("density_trace: t <= 0");
    double r = std::exp(-t);
    double mass = mu.ball_mass(eta, r);
    bool ok = mass > 0.0 && r >= res;
    double v = ok ? std::log(mass) - g.log_psi_of_u(t) : 0.0;
    trace.push(t, v, ok);
  }
  return trace;
}

const char* to_string(RttVerdict v) {
  switch (v) {
    case RttVerdict::Zero: return "Zero";
    case RttVerdict::Infinite: return "Infinite";
    case RttVerdict::FiniteCompatible: return "FiniteCompatible";
    default: return "Undecided";
  }
}

namespace {

struct TraceStats {
  double drift;
  double band;
  int windows;
};

// Window statistic (max or min) over dyadic windows [t0 2^j, t0 2^{j+1});
// drift = deepest window vs earliest window.
bool trace_stats(const DensityTrace& tr, bool use_max, TraceStats& out) {
  double t0 = -1.0;
  for (size_t i = 0; i < tr.size(); ++i)
    if (tr.resolved[i] && tr.t[i] > 0.0) {
      t0 = tr.t[i];
      break;
    }
  if (t0 <= 0.0) return false;
  std::vector<double> stat;
  std::vector<bool> has;
  double lo = 0.0, hi = 0.0, band_lo = 0.0, band_hi = 0.0;
  bool any = false;
  for (size_t i = 0; i < tr.size(); ++i) {
    if (!tr.resolved[i]) continue;
    int j = static_cast<int>(std::floor(std::log2(tr.t[i] / t0) + 1e-12));
    if (j < 0) j = 0;
    if (static_cast<size_t>(j) >= stat.size()) {
      stat.resize(static_cast<size_t>(j) + 1,
                  use_max ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity());
      has.resize(static_cast<size_t>(j) + 1, false);
    }
    double v = tr.value[i];
    if (use_max)
      stat[static_cast<size_t>(j)] = std::max(stat[static_cast<size_t>(j)], v);
    else
      stat[static_cast<size_t>(j)] = std::min(stat[static_cast<size_t>(j)], v);
    has[static_cast<size_t>(j)] = true;
    if (!any) {
      band_lo = band_hi = v;
      any = true;
    } else {
      band_lo = std::min(band_lo, v);
      band_hi = std::max(band_hi, v);
    }
  }
  int first = -1, last = -1;
  for (size_t j = 0; j < stat.size(); ++j) {
    if (!has[j]) continue;
    if (first < 0) {
      first = static_cast<int>(j);
      lo = stat[j];
    }
    last = static_cast<int>(j);
    hi = stat[j];
  }
  if (first < 0 || last <= first) return false;
  out.drift = hi - lo;
  out.band = band_hi - band_lo;
  out.windows = last - first + 1;
  return true;
}

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  size_t i = static_cast<size_t>(q * (v.size() - 1));
  return v[i];
}

}  // namespace

RttResult rtt_verdict(const std::vector<DensityTrace>& traces, RttMode mode,
                      double margin) {
  if (traces.size() < 20)
    throw InsufficientDataError("rtt_verdict: need at least 20 traces");
  bool use_max = mode == RttMode::Hausdorff;
  std::vector<double> drifts, bands;
  int windows = 0;
  for (const auto& tr : traces) {
    TraceStats st{};
    if (trace_stats(tr, use_max, st)) {
      drifts.push_back(st.drift);
      bands.push_back(st.band);
      windows = std::max(windows, st.windows);
    }
  }
  RttResult res;
  res.usable_traces = static_cast<int>(drifts.size());
  res.windows = windows;
  if (drifts.size() < 20)
    throw InsufficientDataError("rtt_verdict: fewer than 20 resolvable traces");
  res.drift_low = quantile(drifts, 0.1);
  res.drift_high = quantile(drifts, 0.9);
  res.band = quantile(bands, 0.9);

  // Zero needs the essential-inf side to blow up: even the lower-quantile
  // trace must drift up. Infinite symmetrically via the upper quantile.
  bool up = res.drift_low >= margin;
  bool down = res.drift_high <= -margin;
  if (up && !down)
    res.verdict = RttVerdict::Zero;
  else if (down && !up)
    res.verdict = RttVerdict::Infinite;
  else if (!up && !down && res.band <= 5.0)
    res.verdict = RttVerdict::FiniteCompatible;
  else
    res.verdict = RttVerdict::Undecided;
  return res;
}

}  // namespace horolab
