// Orientation-preserving isometries of the ball model, represented by
// unit-determinant 2x2 matrices acting on the conjugate half-space model:
// real entries acting on the upper half-plane for d=2, complex entries
// acting on upper half-space via the Poincare extension for d=3.
//
// The conjugation between the models is the involutive inversion
// C(x) = -e_d + 2(x + e_d)/|x + e_d|^2, which exchanges the ball with the
// half-space {x_d > 0} and sends the ball origin to height 1. Interior
// transport keeps 1-|x|^2 exact through the identity m = 4 t / |x + e_d|^2.

#pragma once

#include <complex>

#include "horolab/geom.hpp"

namespace horolab {

using Cx = std::complex<double>;

struct Mat2c {
  Cx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Cx det() const { return a * d - b * c; }
  double frob_sq() const {
    return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  }
  Mat2c operator*(const Mat2c& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  Mat2c inverse_unit() const { return {d, -b, -c, a}; }
  bool real_entries(double tol = 0.0) const {
    return std::fabs(a.imag()) <= tol && std::fabs(b.imag()) <= tol &&
           std::fabs(c.imag()) <= tol && std::fabs(d.imag()) <= tol;
  }
};

// Boundary coordinate in the half-space model; projective at infinity.
struct HsBoundary {
  Cx z{0.0};
  bool inf = false;
};

namespace detail {

struct HsPoint {
  Cx z{0.0};  // horizontal coordinate (real for d=2)
  double t = 1.0;
};

HsPoint hs_from_ball(const ModelPoint& x);
ModelPoint ball_from_hs(int dim, const HsPoint& p);
HsBoundary hsb_from_boundary(const BoundaryPoint& xi);
BoundaryPoint boundary_from_hsb(int dim, const HsBoundary& w);
HsBoundary moebius_boundary(const Mat2c& m, const HsBoundary& w);

}  // namespace detail

class Isometry {
 public:
  Isometry() = default;

  static Isometry identity(int dim);

  // Half-space matrix with determinant 1 within tol; d=2 additionally
  // requires real entries (throws construction errors otherwise).
  static Isometry from_halfspace(int dim, const Mat2c& m, double tol = 1e-10);

  // Accepts any invertible admissible matrix and rescales to det 1.
  static Isometry from_halfspace_normalized(int dim, const Mat2c& m);

  int dim() const { return dim_; }
  const Mat2c& matrix() const { return m_; }
  const Mat2c& inverse_matrix() const { return minv_; }

  Isometry inverse() const;
  Isometry operator*(const Isometry& o) const;  // (g*h)(x) = g(h(x))

  ModelPoint apply(const ModelPoint& x) const;
  BoundaryPoint apply(const BoundaryPoint& xi) const;

  // |g'(xi)| = (1-|p|^2)/|xi-p|^2 with p = g^{-1}(0).
  double conformal_derivative(const BoundaryPoint& xi) const;
  double log_conformal_derivative(const BoundaryPoint& xi) const;

  // dist(0, g(0)) = acosh(|M|_F^2 / 2), exact in the matrix entries.
  double displacement() const;
  ModelPoint origin_image() const { return apply(ModelPoint::origin(dim_)); }
  ModelPoint origin_preimage() const;  // g^{-1}(0)

  bool is_identity(double tol = 1e-9) const;
  double trace_abs() const { return std::abs(m_.a + m_.d); }
  bool is_parabolic(double tol = 1e-9) const;

  // Representative with the PSL sign ambiguity resolved (for dedup keys).
  Mat2c canonical() const;

  // Generators, given in half-space coordinates.
  static Isometry translation(int dim, Cx delta);    // z -> z + delta
  static Isometry inversion(int dim);                // z -> -1/z
  static Isometry dilation(int dim, double factor);  // z -> factor*z
  static Isometry rotation_disk(double theta);       // d=2 rotation about 0
  static Isometry rotation_axis(double theta);       // d=3 rotation about the vertical axis

 private:
  Isometry(int dim, const Mat2c& m, const Mat2c& minv)
      : dim_(dim), m_(m), minv_(minv) {}

  int dim_ = 2;
  Mat2c m_{};
  Mat2c minv_{};
};

}  // namespace horolab
