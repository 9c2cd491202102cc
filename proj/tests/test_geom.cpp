#include <doctest.h>

#include <cmath>

#include "horolab/geom.hpp"
#include "horolab/rng.hpp"
#include "test_util.hpp"

using namespace horolab;
using testutil::random_boundary;
using testutil::random_point;

TEST_CASE("dist basics") {
  ModelPoint o = ModelPoint::origin(2);
  CHECK(dist(o, o) == doctest::Approx(0.0).epsilon(1e-15));
  ModelPoint half = ModelPoint::make(Vec(0.5, 0.0));
  CHECK(dist(o, half) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(dist(half, o) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("dist rejects boundary points") {
  CHECK_THROWS_AS(ModelPoint::make(Vec(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(ModelPoint::make(Vec(0.8, 0.8)), std::domain_error);
  CHECK_THROWS_AS(ModelPoint::make(Vec(1.0 - 1e-13, 0.0)), std::domain_error);
}

TEST_CASE("triangle inequality on random triples") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    ModelPoint a = random_point(rng, dim), b = random_point(rng, dim),
               c = random_point(rng, dim);
    CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-9);
    CHECK(dist(a, b) == doctest::Approx(dist(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("geodesic_point radial formula and round trip") {
  BoundaryPoint e1 = BoundaryPoint::make(Vec(1.0, 0.0));
  ModelPoint p = geodesic_point(e1, std::log(3.0));
  CHECK(p.coords()[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.coords()[1] == doctest::Approx(0.0));
  CHECK(geodesic_point(e1, 0.0).coords()[0] == doctest::Approx(0.0));
  CHECK_THROWS_AS(geodesic_point(e1, -1.0), std::domain_error);

  // log-space-safe round trip up to t = 30
  Rng rng(11);
  for (double t = 0.5; t <= 30.0; t += 0.5) {
    BoundaryPoint eta = random_boundary(rng, 3);
    ModelPoint q = geodesic_point(eta, t);
    CHECK(dist(ModelPoint::origin(3), q) == doctest::Approx(t).epsilon(1e-9));
  }
}

TEST_CASE("busemann closed form matches examples") {
  BoundaryPoint xi = BoundaryPoint::make(Vec(1.0, 0.0));
  ModelPoint o = ModelPoint::origin(2);
  CHECK(busemann(xi, o, o) == doctest::Approx(0.0));
  ModelPoint z = ModelPoint::make(Vec(0.5, 0.0));
  CHECK(busemann(xi, o, z) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("busemann antisymmetry and cocycle") {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    BoundaryPoint xi = random_boundary(rng, dim);
    ModelPoint x = random_point(rng, dim), y = random_point(rng, dim),
               z = random_point(rng, dim);
    CHECK(busemann(xi, y, z) == doctest::Approx(-busemann(xi, z, y)).epsilon(1e-12));
    CHECK(busemann(xi, x, z) ==
          doctest::Approx(busemann(xi, x, y) + busemann(xi, y, z)).epsilon(1e-8));
  }
}

TEST_CASE("busemann agrees with the defining limit") {
  Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    BoundaryPoint xi = random_boundary(rng, dim);
    ModelPoint y = random_point(rng, dim, 0.7), z = random_point(rng, dim, 0.7);
    // finite-truncation oracle with Richardson extrapolation in 10^{-k}
    ModelPoint x7 = ModelPoint::radial(xi, 1e-7);
    ModelPoint x8 = ModelPoint::radial(xi, 1e-8);
    double v7 = dist(x7, y) - dist(x7, z);
    double v8 = dist(x8, y) - dist(x8, z);
    double extrapolated = (10.0 * v8 - v7) / 9.0;
    CHECK(busemann(xi, y, z) == doctest::Approx(extrapolated).epsilon(1e-8));
  }
}

TEST_CASE("gromov product closed form") {
  BoundaryPoint xi = BoundaryPoint::make(Vec(1.0, 0.0));
  BoundaryPoint anti = BoundaryPoint::make(Vec(-1.0, 0.0));
  CHECK(gromov_product(xi, anti) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(gromov_product(xi, xi), std::domain_error);

  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    BoundaryPoint a = random_boundary(rng, dim), b = random_boundary(rng, dim);
    if (chord(a, b) < 1e-8) continue;
    CHECK(gromov_product(a, b) == doctest::Approx(gromov_product(b, a)));
    // within additive constant 1 of log(1/|a-b|)
    CHECK(std::fabs(gromov_product(a, b) - std::log(1.0 / chord(a, b))) <= 1.0);
  }
}

TEST_CASE("gromov product matches the finite-truncation limit") {
  Rng rng(13);
  for (int k = 0; k < 40; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    BoundaryPoint a = random_boundary(rng, dim), b = random_boundary(rng, dim);
    if (chord(a, b) < 1e-4) continue;
    double t = 25.0;
    ModelPoint x = geodesic_point(a, t), y = geodesic_point(b, t);
    double oracle = 0.5 * (2.0 * t - dist(x, y));
    CHECK(gromov_product(a, b) == doctest::Approx(oracle).epsilon(1e-6));
  }
}
