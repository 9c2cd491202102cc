// End-to-end dichotomy predictor: applicability gates from the classical
// proportionality display (mu ~ H^delta iff delta >= kmax, mu ~ P^delta iff
// delta <= kmin) plus the two series classifiers.

#pragma once

#include "horolab/gauge.hpp"
#include "horolab/series.hpp"

namespace horolab {

struct Verdict {
  MeasureValue hausdorff = MeasureValue::NotApplicable;
  MeasureValue packing = MeasureValue::NotApplicable;
  SeriesDecision hausdorff_trace;
  SeriesDecision packing_trace;
  bool mu_proportional_hausdorff_delta = false;  // delta >= kmax
  bool mu_proportional_packing_delta = false;    // delta <= kmin
  bool bounded_psi_note = false;  // Psi bounded: verdict equals the pure-power one
};

// The gauge's delta field is the group's Poincare exponent. Gauges with
// c_lin != 0 are classified directly through the exponential level of the
// series (equivalent to the written series, which Theorem assumptions
// permit); reduce_to_zero_slope is available separately as the algebraic
// normalizer.
Verdict predict_theorem1(const GaugeSpec& g, double kmin, double kmax);

}  // namespace horolab
