#include "horolab/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "horolab/rng.hpp"

namespace horolab {

namespace {

struct KeyHash {
  size_t operator()(const std::array<int64_t, 8>& k) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (int64_t v : k) {
      h ^= static_cast<uint64_t>(v);
      h *= 0x100000001b3ULL;
    }
    return static_cast<size_t>(h);
  }
};
struct PointKeyHash {
  size_t operator()(const std::array<int64_t, 3>& k) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (int64_t v : k) {
      h ^= static_cast<uint64_t>(v);
      h *= 0x100000001b3ULL;
    }
    return static_cast<size_t>(h);
  }
};

std::array<int64_t, 8> element_key(const Isometry& g, double res) {
  Mat2c c = g.canonical();
  auto q = [res](double x) { return static_cast<int64_t>(std::llround(x / res)); };
  return {q(c.a.real()), q(c.a.imag()), q(c.b.real()), q(c.b.imag()),
          q(c.c.real()), q(c.c.imag()), q(c.d.real()), q(c.d.imag())};
}

std::array<int64_t, 3> point_key(const Vec& p, double res) {
  auto q = [res](double x) { return static_cast<int64_t>(std::llround(x / res)); };
  return {q(p[0]), q(p[1]), q(p[2])};
}

// Expansion alphabet: generators and their inverses (canonical dedup drops
// involution doubles downstream).
std::vector<Isometry> alphabet(const GroupSpec& spec) {
  std::vector<Isometry> a;
  for (const auto& g : spec.generators) {
    a.push_back(g);
    a.push_back(g.inverse());
  }
  return a;
}

Mat2c renormalize(const Mat2c& m) {
  Cx det = m.det();
  if (std::abs(det - Cx(1.0)) < 1e-13) return m;
  Cx s = std::sqrt(det);
  return {m.a / s, m.b / s, m.c / s, m.d / s};
}

OrbitEntry make_entry(int dim, const Mat2c& m, int word) {
  Isometry g = Isometry::from_halfspace(dim, m, 1e-6);
  ModelPoint p = g.origin_image();
  return OrbitEntry{m, p.coords(), p.m(), g.displacement(), word};
}

void sort_entries(std::vector<OrbitEntry>& es) {
  std::sort(es.begin(), es.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.point[0] != b.point[0]) return a.point[0] < b.point[0];
    if (a.point[1] != b.point[1]) return a.point[1] < b.point[1];
    return a.point[2] < b.point[2];
  });
}

}  // namespace

std::vector<std::string> GroupSpec::validate() const {
  std::vector<std::string> warnings;
  if (dim != 2 && dim != 3) throw ConfigurationError("GroupSpec: dim must be 2 or 3");
  if (generators.empty()) throw ConfigurationError("GroupSpec: no generators");
  for (const auto& g : generators)
    if (g.dim() != dim) throw ConfigurationError("GroupSpec: generator dimension mismatch");
  for (const auto& cusp : cusps) {
    if (cusp.rank < 1 || cusp.rank > dim - 1)
      throw ConfigurationError("GroupSpec: cusp rank outside [1, d-1]");
    if (!(cusp.base_radius > 0.0 && cusp.base_radius < 1.0))
      throw ConfigurationError("GroupSpec: cusp base_radius outside (0,1)");
    if (cusp.stabilizer_generators.empty())
      throw ConfigurationError("GroupSpec: cusp without stabilizer generators");
    for (const auto& s : cusp.stabilizer_generators) {
      if (!s.is_parabolic(1e-6))
        throw ConfigurationError("GroupSpec: declared stabilizer generator not parabolic");
      BoundaryPoint image = s.apply(cusp.point);
      if (chord(image, cusp.point) > 1e-8)
        throw ConfigurationError("GroupSpec: stabilizer generator does not fix cusp point");
    }
  }
  // Jorgensen inequality, necessary for discrete nonelementary 2-generator
  // subgroups in d=2; failure is only a warning (heuristic check).
  if (dim == 2) {
    for (size_t i = 0; i < generators.size(); ++i) {
      for (size_t j = 0; j < generators.size(); ++j) {
        if (i == j) continue;
        const Isometry &A = generators[i], &B = generators[j];
        Isometry comm = A * B * A.inverse() * B.inverse();
        Cx trA = A.matrix().a + A.matrix().d;
        Cx trC = comm.matrix().a + comm.matrix().d;
        double lhs = std::abs(trA * trA - Cx(4.0)) + std::abs(trC - Cx(2.0));
        if (lhs < 1.0 - 1e-9 && lhs > 1e-9)
          warnings.push_back("Jorgensen inequality fails for generator pair (" +
                             std::to_string(i) + "," + std::to_string(j) +
                             "); group may not be discrete");
      }
    }
  }
  return warnings;
}

double GroupSpec::max_generator_displacement() const {
  double m = 0.0;
  for (const auto& g : generators) m = std::max(m, g.displacement());
  return m;
}

size_t OrbitBall::count_within(double T) const {
  OrbitEntry probe;
  probe.distance = T;
  auto it = std::upper_bound(entries.begin(), entries.end(), T,
                             [](double t, const OrbitEntry& e) { return t < e.distance; });
  return static_cast<size_t>(it - entries.begin());
}

OrbitBall enumerate_elements(const GroupSpec& spec, double T, size_t cap, double margin) {
  spec.validate();
  if (!(T >= 0.0)) throw std::domain_error("enumerate_elements: T < 0");
  if (cap == 0) throw std::domain_error("enumerate_elements: cap = 0");
  if (margin < 0.0) margin = spec.max_generator_displacement() + 0.1;
  const double expand_limit = T + margin;

  std::vector<Isometry> letters = alphabet(spec);
  OrbitBall ball;
  ball.dim = spec.dim;
  ball.truncation = T;

  std::unordered_set<std::array<int64_t, 8>, KeyHash> seen;
  std::deque<std::pair<Mat2c, int>> queue;

  Mat2c id{};
  seen.insert(element_key(Isometry::identity(spec.dim), 1e-9));
  queue.emplace_back(id, 0);
  ball.entries.push_back(make_entry(spec.dim, id, 0));

  size_t explored = 1;
  while (!queue.empty()) {
    auto [m, word] = queue.front();
    queue.pop_front();
    Isometry g = Isometry::from_halfspace(spec.dim, m, 1e-6);
    if (g.displacement() > expand_limit) continue;
    for (const auto& letter : letters) {
      Mat2c child = renormalize(m * letter.matrix());
      Isometry cg = Isometry::from_halfspace(spec.dim, child, 1e-6);
      double d = cg.displacement();
      if (d > expand_limit) continue;
      auto key = element_key(cg, 1e-9);
      if (!seen.insert(key).second) continue;
      if (explored >= cap) {
        ball.truncated_by_cap = true;
        sort_entries(ball.entries);
        return ball;
      }
      ++explored;
      queue.emplace_back(child, word + 1);
      if (d <= T) ball.entries.push_back(make_entry(spec.dim, child, word + 1));
    }
  }
  sort_entries(ball.entries);
  return ball;
}

OrbitBall enumerate_orbit(const GroupSpec& spec, double T, size_t cap, double margin) {
  OrbitBall elements = enumerate_elements(spec, T, cap, margin);
  // Entries are only recorded up to the truncation radius, so element count
  // bounds point count; project and point-deduplicate keeping the first
  // (minimal-word) representative.
  std::stable_sort(elements.entries.begin(), elements.entries.end(),
                   [](const OrbitEntry& a, const OrbitEntry& b) {
                     return a.word_length < b.word_length;
                   });
  std::unordered_set<std::array<int64_t, 3>, PointKeyHash> seen;
  OrbitBall ball;
  ball.dim = elements.dim;
  ball.truncation = elements.truncation;
  ball.truncated_by_cap = elements.truncated_by_cap;
  for (const auto& e : elements.entries) {
    if (seen.insert(point_key(e.point, 1e-9)).second) ball.entries.push_back(e);
  }
  sort_entries(ball.entries);
  // Adjacent-merge pass for points straddling a quantisation bin edge.
  std::vector<OrbitEntry> merged;
  for (const auto& e : ball.entries) {
    if (!merged.empty()) {
      const OrbitEntry& p = merged.back();
      if (std::fabs(p.distance - e.distance) < 1e-7 &&
          dist_sq(p.point, e.point) < 1e-18)
        continue;
    }
    merged.push_back(e);
  }
  ball.entries = std::move(merged);
  return ball;
}

DeltaEstimate estimate_delta(const OrbitBall& orbit, double window_lo, double window_hi) {
  if (orbit.entries.empty()) throw InsufficientDataError("estimate_delta: empty orbit");
  if (!(window_lo < window_hi)) throw std::domain_error("estimate_delta: bad window");
  const double step = 0.25;
  std::vector<double> ts, ys;
  for (double t = window_lo; t <= window_hi + 1e-9; t += step) {
    if (t > orbit.truncation + 1e-9) break;
    size_t n = orbit.count_within(t);
    if (n < 2) continue;
    ts.push_back(t);
    ys.push_back(std::log(static_cast<double>(n)));
  }
  if (ts.size() < 10)
    throw InsufficientDataError("estimate_delta: fewer than 10 usable window samples");
  size_t n = ts.size();
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (size_t i = 0; i < n; ++i) {
    st += ts[i];
    sy += ys[i];
    stt += ts[i] * ts[i];
    sty += ts[i] * ys[i];
  }
  double denom = n * stt - st * st;
  double slope = (n * sty - st * sy) / denom;
  double intercept = (sy - slope * st) / n;
  double ss = 0;
  for (size_t i = 0; i < n; ++i) {
    double r = ys[i] - slope * ts[i] - intercept;
    ss += r * r;
  }
  DeltaEstimate est;
  est.delta = slope;
  est.residual_rms = std::sqrt(ss / n);
  est.stderr_slope = std::sqrt(ss / (n - 2) / (stt - st * st / n));
  est.window_lo = window_lo;
  est.window_hi = window_hi;
  est.samples = static_cast<int>(n);
  return est;
}

std::vector<BoundaryPoint> sample_limit_set(const GroupSpec& spec, int depth,
                                            int count, uint64_t seed) {
  spec.validate();
  if (depth < 1) throw std::domain_error("sample_limit_set: depth < 1");
  std::vector<Isometry> letters = alphabet(spec);
  size_t nl = letters.size();
  auto inverse_of = [nl](size_t j) { return j ^ 1ull; };

  std::vector<BoundaryPoint> out;
  out.reserve(static_cast<size_t>(count));
  const double m_threshold = 2e-6;  // |g(0)| >= 1 - 1e-6
  const int max_retries = 64;

  for (int i = 0; i < count; ++i) {
    bool found = false;
    for (int retry = 0; retry < max_retries && !found; ++retry) {
      Rng rng = Rng::stream(seed, static_cast<uint64_t>(i), static_cast<uint64_t>(retry));
      Mat2c m{};
      size_t last = nl;  // no previous letter
      for (int step = 0; step < depth; ++step) {
        size_t j = rng.below(nl);
        if (last < nl && j == inverse_of(last)) {
          j = (j + 2) % nl;  // deterministic non-backtracking fixup
          if (j == inverse_of(last)) j = (j + 1) % nl;
        }
        m = renormalize(m * letters[j].matrix());
        last = j;
        Isometry g = Isometry::from_halfspace(spec.dim, m, 1e-6);
        ModelPoint p = g.origin_image();
        if (p.m() <= m_threshold) {
          out.push_back(p.radial_projection());
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw InsufficientDataError(
          "sample_limit_set: random words do not reach the requested depth "
          "(group too small or depth budget too low)");
  }
  return out;
}

std::vector<ParabolicPoint> parabolic_orbit(const GroupSpec& spec, int cusp_index,
                                            double T,
                                            std::optional<double> base_radius_override) {
  if (cusp_index < 0 || cusp_index >= static_cast<int>(spec.cusps.size()))
    throw std::domain_error("parabolic_orbit: bad cusp index");
  const CuspDatum& cusp = spec.cusps[static_cast<size_t>(cusp_index)];
  double r_p = base_radius_override.value_or(cusp.base_radius);
  if (!(r_p > 0.0 && r_p < 1.0))
    throw std::domain_error("parabolic_orbit: base radius outside (0,1)");
  double base_level = std::log(r_p / (1.0 - r_p));

  OrbitBall elements = enumerate_elements(spec, T, 4000000);
  std::stable_sort(elements.entries.begin(), elements.entries.end(),
                   [](const OrbitEntry& a, const OrbitEntry& b) {
                     return a.word_length < b.word_length;
                   });

  std::unordered_set<std::array<int64_t, 3>, PointKeyHash> seen;
  std::vector<ParabolicPoint> pts;
  for (const auto& e : elements.entries) {
    Isometry g = e.isometry(spec.dim);
    BoundaryPoint xi = g.apply(cusp.point);
    if (!seen.insert(point_key(xi.u, 1e-9)).second) continue;
    double shift = g.log_conformal_derivative(cusp.point);
    double r = Horoball::radius_from_level(base_level + shift);
    pts.push_back(ParabolicPoint{xi, r, shift, e.word_length});
  }
  std::sort(pts.begin(), pts.end(), [](const ParabolicPoint& a, const ParabolicPoint& b) {
    if (a.radius != b.radius) return a.radius > b.radius;
    if (a.xi.u[0] != b.xi.u[0]) return a.xi.u[0] < b.xi.u[0];
    if (a.xi.u[1] != b.xi.u[1]) return a.xi.u[1] < b.xi.u[1];
    return a.xi.u[2] < b.xi.u[2];
  });
  return pts;
}

namespace {

bool system_disjoint(const std::vector<Horoball>& hs) {
  size_t n = hs.size();
  if (n < 2) return true;
  // Angular-neighbour filter for d=2 collections; brute force otherwise.
  if (hs[0].base.dim() == 2 && n > 512) {
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<double> ang(n);
    for (size_t i = 0; i < n; ++i) ang[i] = std::atan2(hs[i].base.u[1], hs[i].base.u[0]);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return ang[a] < ang[b]; });
    for (size_t ii = 0; ii < n; ++ii) {
      const Horoball& a = hs[idx[ii]];
      for (size_t jj = ii + 1; jj < n + ii; ++jj) {
        const Horoball& b = hs[idx[jj % n]];
        // chord >= 2(r_a + r_b) guarantees disjointness; the angular sort
        // makes chords increase until the wraparound, so stop early.
        double ch = chord(a.base, b.base);
        if (ch >= 2.0 * (a.radius + b.radius) && jj > ii + 1 && ch > 4.0 * a.radius)
          break;
        if (!horoballs_disjoint(a, b)) return false;
      }
    }
    return true;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!horoballs_disjoint(hs[i], hs[j])) return false;
  return true;
}

}  // namespace

HoroballSystem invariant_horoball_system(const GroupSpec& spec, double T) {
  if (spec.cusps.empty())
    throw ConfigurationError("invariant_horoball_system: no parabolic representatives declared");
  // Level shifts are radius-independent, so compute orbits once per cusp.
  std::vector<std::vector<ParabolicPoint>> orbits;
  for (int ci = 0; ci < static_cast<int>(spec.cusps.size()); ++ci)
    orbits.push_back(parabolic_orbit(spec, ci, T));

  double factor = 1.0;
  for (int attempt = 0; attempt < 40; ++attempt) {
    HoroballSystem sys;
    sys.shrink_factor = factor;
    for (size_t ci = 0; ci < orbits.size(); ++ci) {
      double r_base = spec.cusps[ci].base_radius * factor;
      double base_level = std::log(r_base / (1.0 - r_base));
      for (const auto& pp : orbits[ci]) {
        sys.horoballs.emplace_back(pp.xi, Horoball::radius_from_level(base_level + pp.level_shift));
        sys.ranks.push_back(spec.cusps[ci].rank);
      }
    }
    if (system_disjoint(sys.horoballs)) return sys;
    factor /= 2.0;
  }
  throw ConfigurationError(
      "invariant_horoball_system: no shrink factor within 40 halvings yields a "
      "disjoint system (group may not be geometrically finite)");
}

namespace {

CuspDatum cusp_at_infinity(double translation_length) {
  CuspDatum c;
  c.point = BoundaryPoint::make(Vec(0.0, -1.0));  // half-plane infinity
  c.rank = 1;
  c.base_radius = 0.5;  // the horoball {Im z > 1}
  c.stabilizer_generators = {Isometry::translation(2, Cx(translation_length))};
  return c;
}

}  // namespace

GroupSpec make_cyclic_parabolic(double translation_length) {
  GroupSpec g;
  g.label = "cyclic-parabolic";
  g.dim = 2;
  g.generators = {Isometry::translation(2, Cx(translation_length))};
  g.cusps = {cusp_at_infinity(translation_length)};
  return g;
}

GroupSpec make_modular() {
  GroupSpec g;
  g.label = "modular";
  g.dim = 2;
  g.generators = {Isometry::translation(2, Cx(1.0)), Isometry::inversion(2)};
  g.cusps = {cusp_at_infinity(1.0)};
  return g;
}

GroupSpec make_hecke(double lambda) {
  if (!(lambda > 2.0))
    throw ConfigurationError("make_hecke: lambda must exceed 2 for a free product");
  GroupSpec g;
  g.label = "hecke-" + std::to_string(lambda);
  g.dim = 2;
  g.generators = {Isometry::translation(2, Cx(lambda)), Isometry::inversion(2)};
  g.cusps = {cusp_at_infinity(lambda)};
  return g;
}

}  // namespace horolab
