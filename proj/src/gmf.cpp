#include "horolab/gmf.hpp"

#include <cmath>

namespace horolab {

std::pair<int, double> GmfContext::locate(const ModelPoint& x) const {
  int found = -1;
  double depth = 0.0;
  for (size_t i = 0; i < horoballs.size(); ++i) {
    double d = horoballs[i].depth(x);
    if (d > 1e-12) {
      if (found >= 0)
        throw InvariantViolationError(
            "GmfContext: point inside two horoballs (system not disjoint)");
      found = static_cast<int>(i);
      depth = d;
    }
  }
  if (found < 0) return {0, 0.0};
  return {ranks[static_cast<size_t>(found)], depth};
}

double gmf_predict_log(const GmfContext& ctx, const BoundaryPoint& eta, double t) {
  if (!(t > 0.0)) throw std::domain_error("gmf_predict_log: t <= 0");
  auto [k, b] = ctx.locate(geodesic_point(eta, t));
  return -ctx.delta * t + b * (static_cast<double>(k) - ctx.delta);
}

DensityTrace gmf_residual_scan(const AtomicMeasure& mu, const GmfContext& ctx,
                               const BoundaryPoint& eta,
                               const std::vector<double>& t_grid) {
  DensityTrace trace;
  trace.source = DensityTrace::Source::Empirical;
  double res = mu.resolution_scale();
  for (double t : t_grid) {
    double r = std::exp(-t);
    AtomicMeasure::BallMass bm = mu.ball_mass_detail(eta, r);
    // below the approximation's local resolution: empty ball, scale under
    // the atom gap, or a single atom carrying most of the mass
    bool ok = bm.mass > 0.0 && r >= res && bm.max_atom <= 0.5 * bm.mass;
    double value = ok ? std::log(bm.mass) - gmf_predict_log(ctx, eta, t) : 0.0;
    trace.push(t, value, ok);
  }
  return trace;
}

}  // namespace horolab
