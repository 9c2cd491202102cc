// Finitely generated discrete group machinery: breadth-first word
// enumeration, Poincare-exponent estimation, limit-set sampling, parabolic
// orbits with horoball radii, and invariant horoball systems.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horolab/errors.hpp"
#include "horolab/geom.hpp"
#include "horolab/horoball.hpp"
#include "horolab/isometry.hpp"

namespace horolab {

struct CuspDatum {
  BoundaryPoint point;
  int rank = 1;
  double base_radius = 0.5;
  std::vector<Isometry> stabilizer_generators;
};

struct GroupSpec {
  std::string label;
  int dim = 2;
  std::vector<Isometry> generators;
  std::vector<CuspDatum> cusps;

  // Throws on hard violations; returns heuristic warnings (e.g. Jorgensen
  // inequality failures suggesting non-discreteness).
  std::vector<std::string> validate() const;
  double max_generator_displacement() const;
};

struct OrbitEntry {
  Mat2c g;          // group element, half-space matrix with det 1
  Vec point;        // g(0) in ball coordinates
  double m;         // 1 - |g(0)|^2
  double distance;  // dist(0, g(0))
  int word_length;

  Isometry isometry(int dim) const { return Isometry::from_halfspace(dim, g, 1e-8); }
  ModelPoint model_point() const { return ModelPoint::trusted(point, m); }
};

struct OrbitBall {
  int dim = 2;
  double truncation = 0.0;
  bool truncated_by_cap = false;
  std::vector<OrbitEntry> entries;  // sorted by (distance, coords)

  size_t count_within(double T) const;
};

// All group elements with dist(0, g(0)) <= T reachable by words staying
// within T + margin, deduplicated as elements. margin < 0 selects the
// default (max generator displacement + 0.1).
OrbitBall enumerate_elements(const GroupSpec& spec, double T, size_t cap,
                             double margin = -1.0);

// Same ball projected to orbit points (point-deduplicated at 1e-9).
OrbitBall enumerate_orbit(const GroupSpec& spec, double T, size_t cap,
                          double margin = -1.0);

struct DeltaEstimate {
  double delta = 0.0;
  double stderr_slope = 0.0;
  double residual_rms = 0.0;
  double window_lo = 0.0, window_hi = 0.0;
  int samples = 0;
};

// Least-squares slope of log N(T) over the window; throws
// InsufficientDataError below 10 usable grid samples.
DeltaEstimate estimate_delta(const OrbitBall& orbit, double window_lo,
                             double window_hi);

// Radial projections of deep orbit points reached by non-backtracking
// random words; |g(0)| >= 1 - 1e-6 required, deterministic per seed.
std::vector<BoundaryPoint> sample_limit_set(const GroupSpec& spec, int depth,
                                            int count, uint64_t seed);

struct ParabolicPoint {
  BoundaryPoint xi;
  double radius;       // horoball radius pushed forward from base_radius
  double level_shift;  // log|g'(p)| of the representative
  int word_length;
};

// Orbit of cusp `cusp_index` under representatives with dist(0,g(0)) <= T,
// deduplicated by boundary point (minimal-word representative kept),
// sorted by decreasing radius.
std::vector<ParabolicPoint> parabolic_orbit(
    const GroupSpec& spec, int cusp_index, double T,
    std::optional<double> base_radius_override = std::nullopt);

struct HoroballSystem {
  std::vector<Horoball> horoballs;
  std::vector<int> ranks;  // parallel to horoballs
  double shrink_factor = 1.0;
};

// Emits all cusp-orbit horoballs up to truncation T, halving the common
// base-radius factor until the collection is pairwise disjoint. Throws
// ConfigurationError after 40 halvings.
HoroballSystem invariant_horoball_system(const GroupSpec& spec, double T);

// Shipped test-group catalog (all d=2, half-plane matrices).
GroupSpec make_cyclic_parabolic(double translation_length = 3.0);
GroupSpec make_modular();
GroupSpec make_hecke(double lambda);

}  // namespace horolab
