// Synthetic cusp-excursion backend. Along a geodesic toward a mu-typical
// point, the excursion into a horoball of scale n (log(1/r_xi) ~ n L) is a
// tent of slope +-1 entering at t = nL with peak depth E, and the measure
// of the set of eta whose scale-n excursion exceeds depth s decays like
// e^{-Delta_p s} with Delta_p = 2 delta - k_p. The model realizes exactly
// this Borel-Cantelli structure: per scale and cusp, an excursion occurs
// with probability `intensity` and its depth is Exponential(Delta_p),
// independently across scales; overlapping candidates are dropped so that
// at most one excursion is active at any time (disjoint horoballs).
//
// This is the only way the regime kmin < delta < kmax is exercised at desk
// scale: rank-1 and rank-2 cusps coexist only in d=3, where no shipped
// group reaches usable truncation depths.

#pragma once

#include <cstdint>
#include <vector>

#include "horolab/errors.hpp"
#include "horolab/gauge.hpp"
#include "horolab/series.hpp"
#include "horolab/trace.hpp"

namespace horolab {

struct CuspModel {
  int rank = 1;
  double intensity = 1.0;  // per-scale excursion probability, in (0,1]
};

struct ExcursionModel {
  double delta = 1.5;
  std::vector<CuspModel> cusps;
  double lambda = 0.5;  // scale base: scale n sits at t = n log(1/lambda)
  int dim = 3;

  double scale_step() const;  // L = log(1/lambda)
  void validate() const;      // ranks in [1, dim-1], Delta_p > 0, rank != delta
};

struct ExcursionEvent {
  int cusp = 0;
  int64_t scale = 0;
  double t_entry = 0.0;
  double t_peak = 0.0;
  double t_exit = 0.0;
  double depth = 0.0;
};

// Kept (non-overlapping) excursions for scales 1..n_scales; deterministic
// per seed. Apply f to each event in entry order.
void for_each_excursion(const ExcursionModel& model, int64_t n_scales, uint64_t seed,
                        const std::function<void(const ExcursionEvent&)>& f);

std::vector<ExcursionEvent> simulate_excursions(const ExcursionModel& model,
                                                int64_t n_scales, uint64_t seed);

// Throws InvariantViolationError if two events overlap in time.
void validate_event_stream(const std::vector<ExcursionEvent>& events);

// GMF log-density along the simulated history relative to the gauge:
// v(t) = b(t)(k(t) - delta) - Psi(t), sampled at event entry/peak/exit and
// at between-event baseline points. The gauge's delta must equal the
// model's delta (the trace compares mu-mass against psi at the same
// exponent).
DensityTrace synthetic_density_trace(const ExcursionModel& model, const GaugeSpec& g,
                                     int64_t n_scales, uint64_t seed);

struct DriftVerdicts {
  MeasureValue hausdorff = MeasureValue::Undecided;
  MeasureValue packing = MeasureValue::Undecided;
  double drift_max = 0.0;  // deep-vs-early drift of window maxima
  double drift_min = 0.0;  // drift of window minima
  int windows = 0;
};

// Streaming window-drift verdict over dyadic scale windows [2^j, 2^{j+1});
// early statistic = median of windows {4,5,6}, deep = median of the last
// three complete windows; |drift| >= margin decides.
DriftVerdicts synthetic_drift_verdict(const ExcursionModel& model, const GaugeSpec& g,
                                      int64_t n_scales, uint64_t seed,
                                      double margin = 2.0);

}  // namespace horolab
