#include "horolab/predictor.hpp"

namespace horolab {

Verdict predict_theorem1(const GaugeSpec& g, double kmin, double kmax) {
  if (!(kmin <= kmax)) throw std::domain_error("predict_theorem1: kmin > kmax");
  check_assumptions(g);  // always satisfiable in the coefficient basis
  Verdict v;
  v.mu_proportional_hausdorff_delta = g.delta >= kmax;
  v.mu_proportional_packing_delta = g.delta <= kmin;
  v.bounded_psi_note = g.psi_bounded();

  if (g.delta < kmax) {
    v.hausdorff_trace = classify_hausdorff_series(g, kmax);
    v.hausdorff = v.hausdorff_trace.consequence;
    if (v.bounded_psi_note)
      v.hausdorff_trace.steps.push_back(
          "Psi bounded: verdict coincides with the pure-power gauge r^delta");
  } else {
    v.hausdorff = MeasureValue::NotApplicable;
    v.hausdorff_trace.steps.push_back("delta >= kmax: Hausdorff dichotomy not applicable");
  }

  if (g.delta > kmin) {
    v.packing_trace = classify_packing_series(g, kmin);
    v.packing = v.packing_trace.consequence;
    if (v.bounded_psi_note)
      v.packing_trace.steps.push_back(
          "Psi bounded: verdict coincides with the pure-power gauge r^delta");
  } else {
    v.packing = MeasureValue::NotApplicable;
    v.packing_trace.steps.push_back("delta <= kmin: packing dichotomy not applicable");
  }
  return v;
}

}  // namespace horolab
