#include "horolab/measure.hpp"

#include <algorithm>
#include <cmath>

namespace horolab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double angle_of(const Vec& u) { return std::atan2(u[1], u[0]); }

// index of the first sorted angle >= a (angles in [-pi, pi))
size_t lower_idx(const std::vector<double>& angles, double a) {
  return static_cast<size_t>(std::lower_bound(angles.begin(), angles.end(), a) -
                             angles.begin());
}
size_t upper_idx(const std::vector<double>& angles, double a) {
  return static_cast<size_t>(std::upper_bound(angles.begin(), angles.end(), a) -
                             angles.begin());
}

}  // namespace

AtomicMeasure AtomicMeasure::from_atoms(std::vector<Atom> atoms, Provenance prov) {
  if (atoms.empty()) throw NumericError("AtomicMeasure: no atoms");
  AtomicMeasure m;
  m.dim_ = atoms.front().xi.dim();
  m.prov_ = std::move(prov);
  for (const auto& a : atoms) {
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight))
      throw NumericError("AtomicMeasure: invalid weight");
    if (a.xi.dim() != m.dim_) throw NumericError("AtomicMeasure: mixed dimensions");
  }
  if (m.dim_ == 2) {
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
      return angle_of(a.xi.u) < angle_of(b.xi.u);
    });
    // merge angle-coincident atoms so the resolution scale stays positive
    std::vector<Atom> merged;
    for (const auto& a : atoms) {
      if (!merged.empty() &&
          std::fabs(angle_of(a.xi.u) - angle_of(merged.back().xi.u)) < 1e-15)
        merged.back().weight += a.weight;
      else
        merged.push_back(a);
    }
    atoms = std::move(merged);
  }
  m.atoms_ = std::move(atoms);
  m.angles_.reserve(m.atoms_.size());
  m.cum_.reserve(m.atoms_.size());
  double run = 0.0;
  for (size_t i = 0; i < m.atoms_.size(); ++i) {
    const Atom& a = m.atoms_[i];
    if (m.dim_ == 2) m.angles_.push_back(angle_of(a.xi.u));
    run += a.weight;
    m.cum_.push_back(run);
    size_t b = i / kBlock;
    if (b >= m.block_max_.size()) m.block_max_.push_back(a.weight);
    m.block_max_[b] = std::max(m.block_max_[b], a.weight);
  }
  m.total_ = run;
  if (!(m.total_ > 0.0)) throw NumericError("AtomicMeasure: zero total mass");
  return m;
}

AtomicMeasure AtomicMeasure::normalized() const { return scaled(1.0 / total_); }

AtomicMeasure AtomicMeasure::scaled(double factor) const {
  if (!(factor > 0.0)) throw NumericError("AtomicMeasure::scaled: nonpositive factor");
  AtomicMeasure m = *this;
  for (auto& a : m.atoms_) a.weight *= factor;
  for (auto& c : m.cum_) c *= factor;
  m.total_ *= factor;
  return m;
}

double AtomicMeasure::range_max(size_t i, size_t j) const {
  double best = 0.0;
  while (i < j) {
    if (i % kBlock == 0 && i + kBlock <= j) {
      best = std::max(best, block_max_[i / kBlock]);
      i += kBlock;
    } else {
      best = std::max(best, atoms_[i].weight);
      ++i;
    }
  }
  return best;
}

double AtomicMeasure::ball_mass(const BoundaryPoint& eta, double r) const {
  return ball_mass_detail(eta, r).mass;
}

AtomicMeasure::BallMass AtomicMeasure::ball_mass_detail(const BoundaryPoint& eta,
                                                        double r) const {
  if (!(r > 0.0)) throw std::domain_error("ball_mass: r <= 0");
  BallMass out;
  if (r >= 2.0) {
    out.mass = total_;
    out.max_atom = range_max(0, atoms_.size());
    return out;
  }
  if (dim_ != 2) {
    double r2 = r * r;
    for (const auto& a : atoms_)
      if (dist_sq(a.xi.u, eta.u) <= r2) {
        out.mass += a.weight;
        out.max_atom = std::max(out.max_atom, a.weight);
      }
    return out;
  }
  // chord <= r  <=>  |dtheta| <= 2 asin(r/2)
  double half = 2.0 * std::asin(std::min(1.0, r / 2.0));
  double th = angle_of(eta.u);
  double lo = th - half, hi = th + half;
  auto range_acc = [this, &out](size_t i, size_t j) {  // [i, j)
    if (j <= i) return;
    out.mass += cum_[j - 1] - (i > 0 ? cum_[i - 1] : 0.0);
    out.max_atom = std::max(out.max_atom, range_max(i, j));
  };
  if (lo < -kTwoPi / 2.0) {
    range_acc(lower_idx(angles_, lo + kTwoPi), angles_.size());
    lo = -kTwoPi / 2.0;
  }
  if (hi >= kTwoPi / 2.0) {
    range_acc(0, upper_idx(angles_, hi - kTwoPi));
    hi = std::nextafter(kTwoPi / 2.0, 0.0);
  }
  range_acc(lower_idx(angles_, lo), upper_idx(angles_, hi));
  return out;
}

double AtomicMeasure::arc_mass(double theta_lo, double theta_hi) const {
  if (dim_ != 2) throw std::domain_error("arc_mass: d=2 only");
  auto wrap = [](double a) {
    a = std::fmod(a + kTwoPi / 2.0, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a - kTwoPi / 2.0;
  };
  double lo = wrap(theta_lo), hi = wrap(theta_hi);
  auto range_sum = [this](size_t i, size_t j) {
    if (j <= i) return 0.0;
    return cum_[j - 1] - (i > 0 ? cum_[i - 1] : 0.0);
  };
  if (lo <= hi) return range_sum(lower_idx(angles_, lo), lower_idx(angles_, hi));
  return range_sum(lower_idx(angles_, lo), angles_.size()) +
         range_sum(0, lower_idx(angles_, hi));
}

BoundaryPoint AtomicMeasure::sample(Rng& rng) const {
  double u = rng.uniform() * total_;
  size_t i = static_cast<size_t>(std::lower_bound(cum_.begin(), cum_.end(), u) -
                                 cum_.begin());
  if (i >= atoms_.size()) i = atoms_.size() - 1;
  return atoms_[i].xi;
}

double AtomicMeasure::resolution_scale() const {
  if (resolution_ >= 0.0) return resolution_;
  if (atoms_.size() < 2) {
    resolution_ = 0.0;  // a single atom has no gap constraint
    return resolution_;
  }
  double best = 2.0;
  if (dim_ == 2) {
    for (size_t i = 0; i + 1 < angles_.size(); ++i) {
      double d = angles_[i + 1] - angles_[i];
      best = std::min(best, 2.0 * std::sin(d / 2.0));
    }
    double wrapgap = kTwoPi - (angles_.back() - angles_.front());
    best = std::min(best, 2.0 * std::sin(wrapgap / 2.0));
  } else if (atoms_.size() <= 20000) {
    for (size_t i = 0; i < atoms_.size(); ++i) {
      double nn = 4.0;
      for (size_t j = 0; j < atoms_.size(); ++j) {
        if (i == j) continue;
        nn = std::min(nn, dist_sq(atoms_[i].xi.u, atoms_[j].xi.u));
      }
      best = std::min(best, std::sqrt(nn));
    }
  } else {
    best = 2e-9;  // dedup resolution floor for large d=3 measures
  }
  resolution_ = std::max(best, 0.0);
  return resolution_;
}

AtomicMeasure patterson_measure(const OrbitBall& orbit, double s, bool normalize) {
  if (orbit.entries.empty()) throw NumericError("patterson_measure: empty orbit");
  double max_logw = -std::numeric_limits<double>::infinity();
  std::vector<double> logw;
  logw.reserve(orbit.entries.size());
  for (const auto& e : orbit.entries) {
    double lw = -s * e.distance;
    logw.push_back(lw);
    max_logw = std::max(max_logw, lw);
  }
  if (max_logw < -700.0)
    throw NumericError("patterson_measure: all weights underflow (degenerate measure)");
  double Z = 0.0;
  for (double lw : logw) Z += std::exp(lw - max_logw);
  double log_Z = max_logw + std::log(Z);

  std::vector<Atom> atoms;
  atoms.reserve(orbit.entries.size());
  for (size_t i = 0; i < orbit.entries.size(); ++i) {
    double w = normalize ? std::exp(logw[i] - log_Z) : std::exp(logw[i]);
    if (w <= 0.0) continue;
    atoms.push_back(Atom{orbit.entries[i].model_point().radial_projection(), w});
  }
  if (atoms.empty())
    throw NumericError("patterson_measure: all weights underflow (degenerate measure)");
  AtomicMeasure::Provenance prov;
  prov.s = s;
  prov.truncation = orbit.truncation;
  return AtomicMeasure::from_atoms(std::move(atoms), prov);
}

namespace {

// Partition helpers: d=2 equal arcs with an irrational offset (keeps atoms
// off cell boundaries); d=3 equal-z bands times azimuth sectors.
struct Partition {
  int dim;
  int size;
  int bands = 0, sectors = 0;
  double offset;

  explicit Partition(int dim_, int size_) : dim(dim_), size(size_) {
    if (size_ < 2) throw std::domain_error("conformality_defect: degenerate partition");
    offset = 0.61803398874989 / size_;
    if (dim == 3) {
      bands = std::max(2, static_cast<int>(std::lround(std::sqrt(size_ / 2.0))));
      sectors = std::max(2, size_ / bands);
      size = bands * sectors;
    }
  }
  int total_cells() const { return dim == 2 ? size : bands * sectors; }
  int cell_of(const BoundaryPoint& xi) const {
    if (dim == 2) {
      double th = std::atan2(xi.u[1], xi.u[0]) / kTwoPi + 0.5 - offset;
      th -= std::floor(th);
      int c = static_cast<int>(th * size);
      return std::min(c, size - 1);
    }
    double z = std::clamp(xi.u[2], -1.0, 1.0);
    int b = std::min(bands - 1, static_cast<int>((z + 1.0) / 2.0 * bands));
    double th = std::atan2(xi.u[1], xi.u[0]) / kTwoPi + 0.5 - offset;
    th -= std::floor(th);
    int s = std::min(sectors - 1, static_cast<int>(th * sectors));
    return b * sectors + s;
  }
};

}  // namespace

double conformality_defect(const AtomicMeasure& mu, const Isometry& g,
                           double delta, int partition_size) {
  Partition part(mu.dim(), partition_size);
  int n = part.total_cells();
  std::vector<double> mass_gA(static_cast<size_t>(n), 0.0);
  std::vector<double> integral(static_cast<size_t>(n), 0.0);
  Isometry ginv = g.inverse();
  ModelPoint pole = g.origin_preimage();
  double log_mp = std::log(pole.m());
  for (const auto& a : mu.atoms()) {
    // mu(g(A)): atoms with g^{-1}(xi) in A
    mass_gA[static_cast<size_t>(part.cell_of(ginv.apply(a.xi)))] += a.weight;
    // int_A |g'|^delta dmu
    double logd = log_mp - std::log(dist_sq(a.xi.u, pole.coords()));
    integral[static_cast<size_t>(part.cell_of(a.xi))] += a.weight * std::exp(delta * logd);
  }
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    if (mass_gA[static_cast<size_t>(i)] < 1e-6 || integral[static_cast<size_t>(i)] < 1e-6)
      continue;
    defect = std::max(defect, std::fabs(std::log(mass_gA[static_cast<size_t>(i)]) -
                                        std::log(integral[static_cast<size_t>(i)])));
  }
  return defect;
}

double conformality_defect_pushforward(const AtomicMeasure& mu, const Isometry& g,
                                       double delta, int partition_size) {
  if (mu.dim() != 2)
    throw std::domain_error("conformality_defect_pushforward: d=2 only");
  Partition part(2, partition_size);
  // conformal pushforward: atoms at g(xi), weights scaled by |g'(xi)|^delta
  ModelPoint pole = g.origin_preimage();
  double log_mp = std::log(pole.m());
  std::vector<Atom> pushed;
  pushed.reserve(mu.atoms().size());
  for (const auto& a : mu.atoms()) {
    double logd = log_mp - std::log(dist_sq(a.xi.u, pole.coords()));
    pushed.push_back(Atom{g.apply(a.xi), a.weight * std::exp(delta * logd)});
  }
  AtomicMeasure nu = AtomicMeasure::from_atoms(std::move(pushed), mu.provenance());

  // pushed cell boundaries: images of the arc endpoints
  double defect = 0.0;
  for (int i = 0; i < part.size; ++i) {
    double a0 = -kTwoPi / 2.0 + (i + part.offset * part.size) * kTwoPi / part.size;
    double a1 = a0 + kTwoPi / part.size;
    BoundaryPoint e0 = g.apply(BoundaryPoint::angle(a0));
    BoundaryPoint e1 = g.apply(BoundaryPoint::angle(a1));
    double t0 = std::atan2(e0.u[1], e0.u[0]);
    double t1 = std::atan2(e1.u[1], e1.u[0]);
    double m1 = mu.arc_mass(t0, t1);       // mu(g(A))
    double m2 = nu.arc_mass(t0, t1);       // = int_A |g'|^delta dmu
    if (m1 < 1e-6 || m2 < 1e-6) continue;
    defect = std::max(defect, std::fabs(std::log(m1) - std::log(m2)));
  }
  return defect;
}

}  // namespace horolab
