#include <doctest.h>

#include <cmath>

#include "horolab/density.hpp"
#include "horolab/rng.hpp"
#include "test_util.hpp"

using namespace horolab;

namespace {

AtomicMeasure uniform_circle(int n) {
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i)
    atoms.push_back(Atom{BoundaryPoint::angle(-3.1415 + 6.2831853 * i / n), 1.0 / n});
  return AtomicMeasure::from_atoms(std::move(atoms), {});
}

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (double t = lo; t <= hi + 1e-12; t += step) g.push_back(t);
  return g;
}

}  // namespace

TEST_CASE("density trace of a single atom grows linearly") {
  BoundaryPoint eta = BoundaryPoint::angle(1.0);
  AtomicMeasure mu = AtomicMeasure::from_atoms({Atom{eta, 1.0}}, {});
  GaugeSpec g = GaugeSpec::pure_power(0.75);
  DensityTrace tr = density_trace(mu, g, eta, grid(1.0, 10.0, 1.0));
  for (size_t i = 0; i < tr.size(); ++i) {
    REQUIRE(tr.resolved[i]);
    CHECK(tr.value[i] == doctest::Approx(0.75 * tr.t[i]).epsilon(1e-12));
  }
}

TEST_CASE("density trace flags empty balls outside the support") {
  AtomicMeasure mu = AtomicMeasure::from_atoms({Atom{BoundaryPoint::angle(0.0), 1.0}}, {});
  BoundaryPoint eta = BoundaryPoint::angle(3.0);  // far from the atom
  GaugeSpec g = GaugeSpec::pure_power(1.0);
  DensityTrace tr = density_trace(mu, g, eta, grid(1.0, 8.0, 1.0));
  double rho = chord(BoundaryPoint::angle(0.0), eta);
  for (size_t i = 0; i < tr.size(); ++i)
    CHECK(static_cast<bool>(tr.resolved[i]) == (std::exp(-tr.t[i]) >= rho));
}

TEST_CASE("density trace of the uniform measure is flat for psi(r) = r") {
  AtomicMeasure mu = uniform_circle(200000);
  GaugeSpec g = GaugeSpec::pure_power(1.0);
  Rng rng(31);
  for (int i = 0; i < 5; ++i) {
    DensityTrace tr = density_trace(mu, g, testutil::random_boundary(rng, 2),
                                    grid(1.0, 6.0, 0.25));
    double lo = 1e300, hi = -1e300;
    for (size_t k = 0; k < tr.size(); ++k) {
      REQUIRE(tr.resolved[k]);
      lo = std::min(lo, tr.value[k]);
      hi = std::max(hi, tr.value[k]);
    }
    CHECK(hi - lo <= 0.1);
  }
}

namespace {

std::vector<DensityTrace> atomic_traces(int count) {
  std::vector<DensityTrace> traces;
  GaugeSpec g = GaugeSpec::pure_power(1.0);
  for (int i = 0; i < count; ++i) {
    BoundaryPoint eta = BoundaryPoint::angle(0.1 + 0.2 * i);
    AtomicMeasure mu = AtomicMeasure::from_atoms({Atom{eta, 1.0}}, {});
    traces.push_back(density_trace(mu, g, eta, grid(1.0, 16.0, 0.5)));
  }
  return traces;
}

std::vector<DensityTrace> lebesgue_traces(int count, double mass_scale,
                                          double gauge_const) {
  static AtomicMeasure base = uniform_circle(200000);
  AtomicMeasure mu = mass_scale == 1.0 ? base : base.scaled(mass_scale);
  GaugeSpec g = GaugeSpec::pure_power(1.0);
  g.c[5] = gauge_const;
  Rng rng(77);
  std::vector<DensityTrace> traces;
  for (int i = 0; i < count; ++i)
    traces.push_back(density_trace(mu, g, testutil::random_boundary(rng, 2),
                                   grid(1.0, 6.0, 0.25)));
  return traces;
}

}  // namespace

TEST_CASE("rtt verdicts for the atomic and Lebesgue cases") {
  RttResult zero = rtt_verdict(atomic_traces(25), RttMode::Hausdorff);
  CHECK(zero.verdict == RttVerdict::Zero);
  RttResult zero_p = rtt_verdict(atomic_traces(25), RttMode::Packing);
  CHECK(zero_p.verdict == RttVerdict::Zero);

  RttResult finite = rtt_verdict(lebesgue_traces(25, 1.0, 0.0), RttMode::Hausdorff);
  CHECK(finite.verdict == RttVerdict::FiniteCompatible);
  RttResult finite_p = rtt_verdict(lebesgue_traces(25, 1.0, 0.0), RttMode::Packing);
  CHECK(finite_p.verdict == RttVerdict::FiniteCompatible);
}

TEST_CASE("rtt verdict needs twenty traces") {
  CHECK_THROWS_AS(rtt_verdict(atomic_traces(10), RttMode::Hausdorff),
                  InsufficientDataError);
}

TEST_CASE("rtt verdict invariant under measure and gauge scaling") {
  RttResult a = rtt_verdict(lebesgue_traces(25, 1.0, 0.0), RttMode::Hausdorff);
  RttResult b = rtt_verdict(lebesgue_traces(25, 7.3, 0.0), RttMode::Hausdorff);
  RttResult c = rtt_verdict(lebesgue_traces(25, 1.0, 2.2), RttMode::Hausdorff);
  CHECK(a.verdict == b.verdict);
  CHECK(a.verdict == c.verdict);
  RttResult az = rtt_verdict(atomic_traces(25), RttMode::Hausdorff);
  std::vector<DensityTrace> scaled = atomic_traces(25);
  for (auto& tr : scaled)
    for (auto& v : tr.value) v += std::log(7.3);
  RttResult bz = rtt_verdict(scaled, RttMode::Hausdorff);
  CHECK(az.verdict == bz.verdict);
}
