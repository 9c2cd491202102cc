// Poincare ball model primitives in dimension 2 and 3.
//
// Points near the sphere are the numerically delicate part of everything
// downstream: an orbit point at hyperbolic distance T from the origin sits
// at Euclidean distance ~2e^{-T} from the boundary, so the quantity
// m = 1 - |x|^2 underflows its accurate representation long before the
// coordinates do. ModelPoint therefore carries m alongside the coordinates,
// and every constructor that knows m from a stable formula (geodesic
// parametrisation, half-space transport) sets it directly instead of
// recomputing it by cancellation.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace horolab {

constexpr double kBoundaryGuard = 1e-12;  // default epsilon_boundary

struct Vec {
  std::array<double, 3> v{0.0, 0.0, 0.0};
  int dim = 2;

  Vec() = default;
  Vec(double x, double y) : v{x, y, 0.0}, dim(2) {}
  Vec(double x, double y, double z) : v{x, y, z}, dim(3) {}

  double operator[](int i) const { return v[static_cast<size_t>(i)]; }
  double& operator[](int i) { return v[static_cast<size_t>(i)]; }

  Vec operator+(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < dim; ++i) r[i] += o[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < dim; ++i) r[i] -= o[i];
    return r;
  }
  Vec operator*(double a) const {
    Vec r = *this;
    for (int i = 0; i < dim; ++i) r[i] *= a;
    return r;
  }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}
inline double norm_sq(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }
inline double dist_sq(const Vec& a, const Vec& b) { return norm_sq(a - b); }

// Direction on the unit sphere S^{d-1}.
struct BoundaryPoint {
  Vec u;

  BoundaryPoint() : u(1.0, 0.0) {}

  static BoundaryPoint make(const Vec& dir, double tol = 1e-12) {
    double n = norm(dir);
    if (std::fabs(n - 1.0) > tol)
      throw std::domain_error("BoundaryPoint: direction not unit length");
    BoundaryPoint b;
    b.u = dir * (1.0 / n);
    return b;
  }
  // Angle constructor for d=2.
  static BoundaryPoint angle(double theta) {
    BoundaryPoint b;
    b.u = Vec(std::cos(theta), std::sin(theta));
    return b;
  }
  int dim() const { return u.dim; }
};

inline double chord(const BoundaryPoint& a, const BoundaryPoint& b) {
  return norm(a.u - b.u);
}

class ModelPoint {
 public:
  ModelPoint() : x_(0.0, 0.0), m_(1.0) {}

  // Validating constructor: rejects points on or outside the guard shell.
  static ModelPoint make(const Vec& coords, double guard = kBoundaryGuard) {
    double n2 = norm_sq(coords);
    double n = std::sqrt(n2);
    if (!(n < 1.0 - guard))
      throw std::domain_error("ModelPoint: |x| = " + std::to_string(n) +
                              " violates boundary guard");
    ModelPoint p;
    p.x_ = coords;
    p.m_ = (1.0 - n) * (1.0 + n);
    return p;
  }

  // Trusted constructor for internal use: m supplied from a stable formula.
  static ModelPoint trusted(const Vec& coords, double one_minus_norm_sq) {
    if (!(one_minus_norm_sq > 0.0) || !std::isfinite(one_minus_norm_sq))
      throw std::domain_error("ModelPoint: nonpositive 1-|x|^2");
    ModelPoint p;
    p.x_ = coords;
    p.m_ = one_minus_norm_sq;
    return p;
  }

  static ModelPoint origin(int dim) {
    ModelPoint p;
    p.x_.dim = dim;
    return p;
  }

  // Point at Euclidean distance `eps` from the boundary along the radius
  // toward xi, i.e. (1-eps) xi with m computed without cancellation.
  static ModelPoint radial(const BoundaryPoint& xi, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
      throw std::domain_error("ModelPoint::radial: eps outside (0,1)");
    return trusted(xi.u * (1.0 - eps), eps * (2.0 - eps));
  }

  const Vec& coords() const { return x_; }
  double m() const { return m_; }  // 1 - |x|^2
  int dim() const { return x_.dim; }

  BoundaryPoint radial_projection() const {
    double n = norm(x_);
    if (n < 1e-12) {
      // Direction of the origin is undefined; fixed fallback keeps the
      // one-point-orbit measure well defined.
      BoundaryPoint b;
      b.u.dim = x_.dim;
      b.u[0] = 1.0;
      b.u[1] = 0.0;
      if (x_.dim == 3) b.u[2] = 0.0;
      return b;
    }
    BoundaryPoint b;
    b.u = x_ * (1.0 / n);
    return b;
  }

 private:
  Vec x_;
  double m_;
};

// Hyperbolic distance, acosh(1 + 2|x-y|^2 / (m_x m_y)).
inline double dist(const ModelPoint& x, const ModelPoint& y) {
  double u = 2.0 * dist_sq(x.coords(), y.coords()) / (x.m() * y.m());
  return std::acosh(1.0 + std::max(0.0, u));
}

// Point eta_t on the geodesic ray from the origin toward eta with
// dist(0, eta_t) = t. Uses m = sech^2(t/2) = 4 e^{-t} / (1+e^{-t})^2,
// exact in log space for t up to ~700.
inline ModelPoint geodesic_point(const BoundaryPoint& eta, double t) {
  if (t < 0.0) throw std::domain_error("geodesic_point: t < 0");
  double r = std::tanh(t / 2.0);
  double q = std::exp(-t);
  double m = 4.0 * q / ((1.0 + q) * (1.0 + q));
  return ModelPoint::trusted(eta.u * r, m);
}

// b_xi(w) = log(|xi - w|^2 / (1-|w|^2)); horospheres about xi are its level
// sets and b_xi(0) = 0.
inline double busemann_raw(const BoundaryPoint& xi, const ModelPoint& w) {
  double d2 = dist_sq(xi.u, w.coords());
  if (d2 <= 0.0) throw std::domain_error("busemann: point equals xi");
  return std::log(d2 / w.m());
}

// Busemann cocycle beta_xi(y, z) = lim_{x->xi} [dist(x,y) - dist(x,z)],
// evaluated in closed form.
inline double busemann(const BoundaryPoint& xi, const ModelPoint& y,
                       const ModelPoint& z) {
  return busemann_raw(xi, y) - busemann_raw(xi, z);
}

// Gromov product with base point 0. In the ball model the limit is exactly
// log(2 / |xi - eta|).
inline double gromov_product(const BoundaryPoint& xi, const BoundaryPoint& eta) {
  double c = chord(xi, eta);
  if (c <= 0.0) throw std::domain_error("gromov_product: xi == eta");
  return std::log(2.0 / c);
}

}  // namespace horolab
