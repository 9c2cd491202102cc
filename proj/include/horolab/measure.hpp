// Patterson-Sullivan measure approximation: finitely supported boundary
// measures built from exponentially weighted orbit sums, ball-mass queries,
// and the conformality defect diagnostic.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "horolab/errors.hpp"
#include "horolab/geom.hpp"
#include "horolab/group.hpp"
#include "horolab/isometry.hpp"
#include "horolab/rng.hpp"

namespace horolab {

struct Atom {
  BoundaryPoint xi;
  double weight;
};

class AtomicMeasure {
 public:
  struct Provenance {
    std::string group_label;
    double s = 0.0;
    double truncation = 0.0;
  };

  AtomicMeasure() = default;
  static AtomicMeasure from_atoms(std::vector<Atom> atoms, Provenance prov);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double total_mass() const { return total_; }
  int dim() const { return dim_; }
  const Provenance& provenance() const { return prov_; }

  AtomicMeasure normalized() const;
  AtomicMeasure scaled(double factor) const;

  // Sum of weights of atoms within Euclidean distance r of eta.
  double ball_mass(const BoundaryPoint& eta, double r) const;

  struct BallMass {
    double mass = 0.0;
    double max_atom = 0.0;  // largest single atom weight inside the ball
  };
  // Ball mass plus the largest contributing atom; a ball whose mass is
  // carried mostly by one atom is below the approximation's local
  // resolution (truncation artifact, not measure structure).
  BallMass ball_mass_detail(const BoundaryPoint& eta, double r) const;

  // Arc mass for d=2: atoms with angle in [theta_lo, theta_hi) mod 2pi.
  double arc_mass(double theta_lo, double theta_hi) const;

  BoundaryPoint sample(Rng& rng) const;

  // Minimum nearest-neighbour gap between atoms; scales below this are not
  // resolvable. Computed lazily (exact for d=2; brute force for small d=3).
  double resolution_scale() const;

 private:
  std::vector<Atom> atoms_;  // d=2: sorted by angle
  std::vector<double> angles_;
  std::vector<double> cum_;        // cumulative weights (sampling + arc queries)
  std::vector<double> block_max_;  // per-64 block maxima for range-max queries
  double total_ = 0.0;
  int dim_ = 2;
  Provenance prov_;
  mutable double resolution_ = -1.0;

  static constexpr size_t kBlock = 64;
  double range_max(size_t i, size_t j) const;  // max weight over [i, j)
};

// Orbit-sum approximation: an atom at the radial projection of each orbit
// point with weight e^{-s dist(0,g(0))}, computed in log space.
AtomicMeasure patterson_measure(const OrbitBall& orbit, double s, bool normalize);

// Max over partition cells A of |log mu(g(A)) - log int_A |g'|^delta dmu|;
// cells where either mass is below 1e-6 are skipped.
double conformality_defect(const AtomicMeasure& mu, const Isometry& g,
                           double delta, int partition_size);

// Same defect evaluated through the conformal pushforward measure
// (atoms moved to g(xi), weights scaled by |g'(xi)|^delta) over the pushed
// partition; equal to conformality_defect by change of variables. d=2 only.
double conformality_defect_pushforward(const AtomicMeasure& mu, const Isometry& g,
                                       double delta, int partition_size);

}  // namespace horolab
