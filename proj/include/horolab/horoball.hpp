// Horoballs H(xi, r) = B((1-r)xi, r), the Euclidean ball internally tangent
// to the unit sphere at xi. A horoball is the sublevel set
// {x : b_xi(x) <= log(r/(1-r))} of the Busemann function, so signed depth
// (hyperbolic distance to the horosphere, positive inside) is a difference
// of Busemann levels and transforms exactly under isometries.

#pragma once

#include <algorithm>
#include <cmath>

#include "horolab/geom.hpp"
#include "horolab/isometry.hpp"

namespace horolab {

struct Horoball {
  BoundaryPoint base;
  double radius = 0.5;  // Euclidean radius in (0,1)

  Horoball() = default;
  Horoball(const BoundaryPoint& xi, double r) : base(xi), radius(r) {
    if (!(r > 0.0 && r < 1.0))
      throw std::domain_error("Horoball: radius outside (0,1)");
  }

  // Busemann level of the bounding horosphere.
  double level() const { return std::log(radius / (1.0 - radius)); }
  static double radius_from_level(double lv) {
    // logistic, stable on both tails
    if (lv < 0.0) {
      double e = std::exp(lv);
      return e / (1.0 + e);
    }
    double e = std::exp(-lv);
    return 1.0 / (1.0 + e);
  }

  Vec center() const { return base.u * (1.0 - radius); }

  // Signed hyperbolic distance to the horosphere: positive strictly inside.
  double depth(const ModelPoint& x) const { return level() - busemann_raw(base, x); }
  bool contains(const ModelPoint& x, double tol = 0.0) const { return depth(x) > tol; }

  // dist(0, boundary of H) for horoballs not containing the origin.
  double distance_to_origin() const { return -level(); }

  // Exact push-forward: g(H(xi,r)) is the horoball at g(xi) whose Busemann
  // level is shifted by log|g'(xi)|.
  Horoball transform(const Isometry& g) const {
    double lv = level() + g.log_conformal_derivative(base);
    return Horoball(g.apply(base), radius_from_level(lv));
  }
};

// Euclidean disjointness of two internally tangent balls.
inline bool horoballs_disjoint(const Horoball& a, const Horoball& b) {
  double d = norm(a.center() - b.center());
  return d >= a.radius + b.radius;
}

// Tent profile f_xi(t) approximating the penetration depth of the geodesic
// ray toward eta inside H(xi, r_xi); dist_to_xi = |xi - eta|.
inline double excursion_profile(double t, double dist_to_xi, double r_xi) {
  if (!(dist_to_xi > 0.0 && dist_to_xi < 2.0))
    throw std::domain_error("excursion_profile: |xi-eta| outside (0,2)");
  if (!(r_xi > 0.0 && r_xi < 1.0))
    throw std::domain_error("excursion_profile: r_xi outside (0,1)");
  double log_inv_r = -std::log(r_xi);
  double t_peak = -std::log(dist_to_xi);
  return std::min(t - log_inv_r, 2.0 * t_peak - log_inv_r - t);
}

// Peak location t_xi = log(1/|xi-eta|) and peak value t_xi - log(1/r_xi).
inline double excursion_peak_time(double dist_to_xi) { return -std::log(dist_to_xi); }
inline double excursion_peak_value(double dist_to_xi, double r_xi) {
  return std::log(r_xi / dist_to_xi);
}

}  // namespace horolab
