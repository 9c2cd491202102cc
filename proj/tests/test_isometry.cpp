#include <doctest.h>

#include <cmath>

#include "horolab/isometry.hpp"
#include "horolab/rng.hpp"
#include "test_util.hpp"

using namespace horolab;
using testutil::random_boundary;
using testutil::random_isometry;
using testutil::random_point;

TEST_CASE("identity fixes everything") {
  for (int dim : {2, 3}) {
    Isometry id = Isometry::identity(dim);
    Rng rng(1);
    ModelPoint x = random_point(rng, dim);
    ModelPoint y = id.apply(x);
    CHECK(dist(x, y) < 1e-12);
    BoundaryPoint xi = random_boundary(rng, dim);
    CHECK(chord(id.apply(xi), xi) < 1e-12);
    CHECK(id.conformal_derivative(xi) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("construction rejects bad matrices") {
  Mat2c det2{Cx(2.0), Cx(0.0), Cx(0.0), Cx(1.0)};
  CHECK_THROWS_AS(Isometry::from_halfspace(2, det2), std::invalid_argument);
  Mat2c complex_d2{Cx(1.0, 0.5), Cx(0.0), Cx(0.0), Cx(1.0)};
  CHECK_THROWS_AS(Isometry::from_halfspace(2, complex_d2), std::invalid_argument);
  Mat2c singular{Cx(1.0), Cx(1.0), Cx(1.0), Cx(1.0)};
  CHECK_THROWS_AS(Isometry::from_halfspace_normalized(2, singular), std::invalid_argument);
  // normalization accepts any positive determinant in d=2
  Isometry g = Isometry::from_halfspace_normalized(2, det2);
  CHECK(std::abs(g.matrix().det() - Cx(1.0)) < 1e-12);
}

TEST_CASE("inverse round trip on interior and boundary") {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    Isometry g = random_isometry(rng, dim);
    ModelPoint x = random_point(rng, dim);
    CHECK(dist(g.inverse().apply(g.apply(x)), x) < 1e-8);
    BoundaryPoint xi = random_boundary(rng, dim);
    CHECK(chord(g.inverse().apply(g.apply(xi)), xi) < 1e-9);
  }
}

TEST_CASE("dist is isometry invariant") {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    Isometry g = random_isometry(rng, dim);
    ModelPoint x = random_point(rng, dim), y = random_point(rng, dim);
    CHECK(dist(g.apply(x), g.apply(y)) == doctest::Approx(dist(x, y)).epsilon(1e-8));
  }
}

TEST_CASE("boundary points map to boundary points") {
  Rng rng(19);
  for (int k = 0; k < 50; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    Isometry g = random_isometry(rng, dim);
    BoundaryPoint xi = random_boundary(rng, dim);
    CHECK(norm(g.apply(xi).u) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("conformal derivative chain rule") {
  Rng rng(29);
  for (int k = 0; k < 100; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    Isometry g = random_isometry(rng, dim), h = random_isometry(rng, dim);
    BoundaryPoint xi = random_boundary(rng, dim);
    double lhs = (g * h).conformal_derivative(xi);
    double rhs = g.conformal_derivative(h.apply(xi)) * h.conformal_derivative(xi);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("conformal derivative matches the finite-difference limit") {
  Rng rng(37);
  for (int k = 0; k < 60; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    Isometry g = random_isometry(rng, dim);
    BoundaryPoint xi = random_boundary(rng, dim);
    Vec tangent = random_boundary(rng, dim).u;
    Vec tan = tangent - xi.u * dot(tangent, xi.u);
    double n = norm(tan);
    if (n < 1e-9) continue;
    tan = tan * (1.0 / n);
    // chord-quotient at separations 1e-4 and 1e-5 along a fixed tangent,
    // Richardson-extrapolated (error is linear in the separation)
    auto quotient = [&](double h) {
      Vec moved = xi.u * std::cos(h) + tan * std::sin(h);
      BoundaryPoint eta = BoundaryPoint::make(moved);
      return chord(g.apply(xi), g.apply(eta)) / chord(xi, eta);
    };
    double q4 = quotient(1e-4), q5 = quotient(1e-5);
    double extrapolated = (10.0 * q5 - q4) / 9.0;
    double expected = g.conformal_derivative(xi);
    CHECK(extrapolated == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("displacement equals dist(0, g(0))") {
  Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    int dim = k % 2 == 0 ? 2 : 3;
    Isometry g = random_isometry(rng, dim);
    double a = g.displacement();
    double b = dist(ModelPoint::origin(dim), g.origin_image());
    // acosh near 1 is sqrt-conditioned, so near-identity words only agree
    // to ~sqrt(eps) absolutely
    CHECK(std::fabs(a - b) <= 5e-8 + 1e-9 * a);
  }
}

TEST_CASE("parabolic classification") {
  CHECK(Isometry::translation(2, Cx(3.0)).is_parabolic());
  CHECK(!Isometry::inversion(2).is_parabolic());
  CHECK(!Isometry::dilation(2, 2.0).is_parabolic());
  CHECK(!Isometry::identity(2).is_parabolic());
}

TEST_CASE("translation fixes the half-space infinity point") {
  Isometry t = Isometry::translation(2, Cx(3.0));
  BoundaryPoint inf_pt = BoundaryPoint::make(Vec(0.0, -1.0));
  CHECK(chord(t.apply(inf_pt), inf_pt) < 1e-12);
  CHECK(t.conformal_derivative(inf_pt) == doctest::Approx(1.0).epsilon(1e-9));

  Isometry t3 = Isometry::translation(3, Cx(1.0, 2.0));
  BoundaryPoint inf3 = BoundaryPoint::make(Vec(0.0, 0.0, -1.0));
  CHECK(chord(t3.apply(inf3), inf3) < 1e-12);
}

TEST_CASE("rotations fix the origin and have unit derivative") {
  Isometry r = Isometry::rotation_disk(1.2);
  CHECK(dist(r.apply(ModelPoint::origin(2)), ModelPoint::origin(2)) < 1e-12);
  Rng rng(43);
  BoundaryPoint xi = random_boundary(rng, 2);
  CHECK(r.conformal_derivative(xi) == doctest::Approx(1.0).epsilon(1e-10));
  // boundary action is a rotation by a fixed angle
  double a0 = std::atan2(r.apply(BoundaryPoint::angle(0.3)).u[1],
                         r.apply(BoundaryPoint::angle(0.3)).u[0]) - 0.3;
  double a1 = std::atan2(r.apply(BoundaryPoint::angle(1.7)).u[1],
                         r.apply(BoundaryPoint::angle(1.7)).u[0]) - 1.7;
  auto wrap = [](double x) { return std::remainder(x, 6.283185307179586); };
  CHECK(wrap(a0) == doctest::Approx(wrap(a1)).epsilon(1e-9));
}
