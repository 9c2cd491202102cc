// Shrinking-target (Khinchin-type) simulator: for a parabolic orbit
// {(xi, r_xi)} and a Khinchin function phi, records which boundary samples
// eta satisfy |xi - eta| <= phi(r_xi) r_xi at which scales, and compares the
// empirical 0-1 trend against the series verdict.

#pragma once

#include <functional>
#include <vector>

#include "horolab/group.hpp"
#include "horolab/series.hpp"

namespace horolab {

struct KhinchinHits {
  // per eta: ascending scales s = -log r_xi of hit horoballs
  std::vector<std::vector<double>> hit_scales;
  double min_scale = 0.0;
  double max_scale = 0.0;
  size_t orbit_points = 0;
};

KhinchinHits simulate_khinchin_hits(const GroupSpec& spec, int p_index,
                                    const std::function<double(double)>& phi_of_r,
                                    const std::vector<BoundaryPoint>& etas, double T);

struct ZeroOneReport {
  std::vector<double> thresholds;     // deepening scale thresholds
  std::vector<double> tail_fraction;  // fraction of etas hitting beyond each
  Convergence series_verdict = Convergence::Undecided;
  bool consistent = false;
};

// Divergent series: tail-hit fraction should stay near 1 at every
// threshold; convergent: fraction should decay as the threshold deepens.
// Requires >= 50 sampled eta. Default thresholds sit at fractions
// {0.45, 0.6, 0.75} of the available scale range.
ZeroOneReport khinchin_zero_one_estimate(const KhinchinHits& hits,
                                         Convergence series_verdict,
                                         std::vector<double> thresholds = {});

}  // namespace horolab
