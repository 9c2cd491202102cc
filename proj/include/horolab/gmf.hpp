// Global Measure Formula evaluator: mu(B(eta, e^{-t})) is comparable to
// e^{-delta t} e^{b(eta_t)(k(eta_t)-delta)}, where (k, b) read off the rank
// and penetration depth of the horoball containing eta_t (zero outside).

#pragma once

#include <utility>
#include <vector>

#include "horolab/errors.hpp"
#include "horolab/geom.hpp"
#include "horolab/group.hpp"
#include "horolab/horoball.hpp"
#include "horolab/measure.hpp"
#include "horolab/trace.hpp"

namespace horolab {

struct GmfContext {
  double delta = 1.0;
  std::vector<Horoball> horoballs;
  std::vector<int> ranks;  // parallel to horoballs

  static GmfContext from_system(double delta, const HoroballSystem& sys) {
    return GmfContext{delta, sys.horoballs, sys.ranks};
  }

  // (k(x), b(x)): rank and depth of the containing horoball, (0,0) outside.
  // Throws InvariantViolationError if two horoballs claim the point.
  std::pair<int, double> locate(const ModelPoint& x) const;
};

// log of the GMF prediction at eta_t.
double gmf_predict_log(const GmfContext& ctx, const BoundaryPoint& eta, double t);

// residual(t) = log mu(B(eta, e^{-t})) - gmf_predict_log; entries with empty
// balls or scales below the atom resolution are flagged unresolved.
DensityTrace gmf_residual_scan(const AtomicMeasure& mu, const GmfContext& ctx,
                               const BoundaryPoint& eta,
                               const std::vector<double>& t_grid);

}  // namespace horolab
