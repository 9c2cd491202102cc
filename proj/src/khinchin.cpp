#include "horolab/khinchin.hpp"

#include <algorithm>
#include <cmath>

namespace horolab {

KhinchinHits simulate_khinchin_hits(const GroupSpec& spec, int p_index,
                                    const std::function<double(double)>& phi_of_r,
                                    const std::vector<BoundaryPoint>& etas, double T) {
  std::vector<ParabolicPoint> orbit = parabolic_orbit(spec, p_index, T);
  KhinchinHits out;
  out.orbit_points = orbit.size();
  if (orbit.empty()) throw InsufficientDataError("simulate_khinchin_hits: empty parabolic orbit");
  out.min_scale = -std::log(orbit.front().radius);  // largest radius first
  out.max_scale = -std::log(orbit.back().radius);

  // evaluate phi once per horoball
  std::vector<double> target_radius(orbit.size());
  for (size_t i = 0; i < orbit.size(); ++i) {
    double phi = phi_of_r(orbit[i].radius);
    if (!(phi >= 0.0))
      throw std::domain_error("simulate_khinchin_hits: phi must be nonnegative");
    target_radius[i] = phi * orbit[i].radius;
  }

  out.hit_scales.resize(etas.size());
  for (size_t e = 0; e < etas.size(); ++e) {
    auto& hits = out.hit_scales[e];
    for (size_t i = 0; i < orbit.size(); ++i) {
      if (target_radius[i] <= 0.0) continue;
      if (chord(orbit[i].xi, etas[e]) <= target_radius[i])
        hits.push_back(-std::log(orbit[i].radius));
    }
    std::sort(hits.begin(), hits.end());
  }
  return out;
}

ZeroOneReport khinchin_zero_one_estimate(const KhinchinHits& hits,
                                         Convergence series_verdict,
                                         std::vector<double> thresholds) {
  if (hits.hit_scales.size() < 50)
    throw InsufficientDataError("khinchin_zero_one_estimate: need >= 50 sampled eta");
  ZeroOneReport rep;
  rep.series_verdict = series_verdict;
  if (thresholds.empty()) {
    double span = hits.max_scale - hits.min_scale;
    thresholds = {hits.min_scale + 0.45 * span, hits.min_scale + 0.6 * span,
                  hits.min_scale + 0.75 * span};
  }
  std::sort(thresholds.begin(), thresholds.end());
  rep.thresholds = thresholds;
  for (double thr : thresholds) {
    size_t n = 0;
    for (const auto& hs : hits.hit_scales)
      if (!hs.empty() && hs.back() >= thr) ++n;
    rep.tail_fraction.push_back(static_cast<double>(n) /
                                static_cast<double>(hits.hit_scales.size()));
  }
  if (series_verdict == Convergence::Diverges) {
    rep.consistent = true;
    for (double f : rep.tail_fraction)
      if (f < 0.9) rep.consistent = false;
  } else if (series_verdict == Convergence::Converges) {
    rep.consistent = true;
    for (size_t i = 1; i < rep.tail_fraction.size(); ++i)
      if (rep.tail_fraction[i] >= rep.tail_fraction[i - 1]) rep.consistent = false;
  }
  return rep;
}

}  // namespace horolab
