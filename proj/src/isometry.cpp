#include "horolab/isometry.hpp"

#include <cmath>
#include <stdexcept>

namespace horolab {

namespace detail {

HsPoint hs_from_ball(const ModelPoint& x) {
  const Vec& v = x.coords();
  if (x.dim() == 2) {
    double s = v[0] * v[0] + (v[1] + 1.0) * (v[1] + 1.0);
    return {Cx(2.0 * v[0] / s, 0.0), x.m() / s};
  }
  double s = v[0] * v[0] + v[1] * v[1] + (v[2] + 1.0) * (v[2] + 1.0);
  return {Cx(2.0 * v[0] / s, 2.0 * v[1] / s), x.m() / s};
}

ModelPoint ball_from_hs(int dim, const HsPoint& p) {
  if (!(p.t > 0.0))
    throw std::domain_error("ball_from_hs: nonpositive height");
  double zz = std::norm(p.z);
  double s = zz + (p.t + 1.0) * (p.t + 1.0);
  double m = 4.0 * p.t / s;
  if (dim == 2)
    return ModelPoint::trusted(Vec(2.0 * p.z.real() / s, (1.0 - zz - p.t * p.t) / s), m);
  return ModelPoint::trusted(
      Vec(2.0 * p.z.real() / s, 2.0 * p.z.imag() / s, (1.0 - zz - p.t * p.t) / s), m);
}

HsBoundary hsb_from_boundary(const BoundaryPoint& xi) {
  const Vec& v = xi.u;
  if (xi.dim() == 2) {
    double s = v[0] * v[0] + (v[1] + 1.0) * (v[1] + 1.0);
    if (s < 1e-30) return {Cx(0.0), true};
    return {Cx(2.0 * v[0] / s, 0.0), false};
  }
  double s = v[0] * v[0] + v[1] * v[1] + (v[2] + 1.0) * (v[2] + 1.0);
  if (s < 1e-30) return {Cx(0.0), true};
  return {Cx(2.0 * v[0] / s, 2.0 * v[1] / s), false};
}

BoundaryPoint boundary_from_hsb(int dim, const HsBoundary& w) {
  BoundaryPoint b;
  if (w.inf) {
    b.u = dim == 2 ? Vec(0.0, -1.0) : Vec(0.0, 0.0, -1.0);
    return b;
  }
  double zz = std::norm(w.z);
  double s = zz + 1.0;
  if (dim == 2)
    b.u = Vec(2.0 * w.z.real() / s, (1.0 - zz) / s);
  else
    b.u = Vec(2.0 * w.z.real() / s, 2.0 * w.z.imag() / s, (1.0 - zz) / s);
  // renormalise against drift; s-formula keeps this within ~1 ulp
  double n = norm(b.u);
  b.u = b.u * (1.0 / n);
  return b;
}

HsBoundary moebius_boundary(const Mat2c& m, const HsBoundary& w) {
  if (w.inf) {
    if (std::abs(m.c) < 1e-300) return {Cx(0.0), true};
    return {m.a / m.c, false};
  }
  Cx num = m.a * w.z + m.b;
  Cx den = m.c * w.z + m.d;
  double nd = std::abs(den);
  if (nd < 1e-150) {
    // Image beyond representable magnitude: collapse to infinity; the
    // ball-side error is below coordinate resolution.
    if (std::abs(num) > nd * 1e150) return {Cx(0.0), true};
  }
  return {num / den, false};
}

}  // namespace detail

Isometry Isometry::identity(int dim) {
  if (dim != 2 && dim != 3) throw std::domain_error("Isometry: dim must be 2 or 3");
  return Isometry(dim, Mat2c{}, Mat2c{});
}

Isometry Isometry::from_halfspace(int dim, const Mat2c& m, double tol) {
  if (dim != 2 && dim != 3) throw std::domain_error("Isometry: dim must be 2 or 3");
  if (dim == 2 && !m.real_entries(1e-14))
    throw std::invalid_argument("Isometry: d=2 requires real matrix entries");
  Cx det = m.det();
  if (std::abs(det - Cx(1.0)) > tol)
    throw std::invalid_argument("Isometry: determinant not 1 within tolerance");
  return Isometry(dim, m, m.inverse_unit());
}

Isometry Isometry::from_halfspace_normalized(int dim, const Mat2c& m) {
  Cx det = m.det();
  if (std::abs(det) < 1e-12)
    throw std::invalid_argument("Isometry: singular matrix");
  if (dim == 2) {
    if (!m.real_entries(1e-14))
      throw std::invalid_argument("Isometry: d=2 requires real matrix entries");
    if (det.real() <= 0.0)
      throw std::invalid_argument("Isometry: d=2 requires positive determinant");
  }
  Cx s = std::sqrt(det);
  Mat2c n{m.a / s, m.b / s, m.c / s, m.d / s};
  return Isometry(dim, n, n.inverse_unit());
}

Isometry Isometry::inverse() const { return Isometry(dim_, minv_, m_); }

Isometry Isometry::operator*(const Isometry& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("Isometry: dimension mismatch");
  return Isometry(dim_, m_ * o.m_, o.minv_ * minv_);
}

ModelPoint Isometry::apply(const ModelPoint& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("Isometry::apply: dimension mismatch");
  detail::HsPoint p = detail::hs_from_ball(x);
  if (dim_ == 2) {
    Cx zz(p.z.real(), p.t);
    Cx w = (m_.a * zz + m_.b) / (m_.c * zz + m_.d);
    return detail::ball_from_hs(2, {Cx(w.real(), 0.0), w.imag()});
  }
  // Poincare extension on quaternions z + t j:
  //   g(z + tj) = ((az+b)conj(cz+d) + a conj(c) t^2 + t j) / (|cz+d|^2 + |c|^2 t^2)
  Cx q = m_.c * p.z + m_.d;
  double den = std::norm(q) + std::norm(m_.c) * p.t * p.t;
  Cx znew = ((m_.a * p.z + m_.b) * std::conj(q) + m_.a * std::conj(m_.c) * p.t * p.t) / den;
  double tnew = p.t / den;
  return detail::ball_from_hs(3, {znew, tnew});
}

BoundaryPoint Isometry::apply(const BoundaryPoint& xi) const {
  if (xi.dim() != dim_) throw std::invalid_argument("Isometry::apply: dimension mismatch");
  return detail::boundary_from_hsb(dim_, detail::moebius_boundary(m_, detail::hsb_from_boundary(xi)));
}

ModelPoint Isometry::origin_preimage() const {
  return inverse().apply(ModelPoint::origin(dim_));
}

double Isometry::conformal_derivative(const BoundaryPoint& xi) const {
  ModelPoint p = origin_preimage();
  double d2 = dist_sq(xi.u, p.coords());
  if (d2 <= 0.0) throw std::domain_error("conformal_derivative: xi coincides with pole");
  return p.m() / d2;
}

double Isometry::log_conformal_derivative(const BoundaryPoint& xi) const {
  ModelPoint p = origin_preimage();
  double d2 = dist_sq(xi.u, p.coords());
  if (d2 <= 0.0) throw std::domain_error("conformal_derivative: xi coincides with pole");
  return std::log(p.m()) - std::log(d2);
}

double Isometry::displacement() const {
  return std::acosh(std::max(1.0, m_.frob_sq() / 2.0));
}

bool Isometry::is_identity(double tol) const {
  Mat2c k = canonical();
  return std::abs(k.a - Cx(1.0)) <= tol && std::abs(k.b) <= tol &&
         std::abs(k.c) <= tol && std::abs(k.d - Cx(1.0)) <= tol;
}

bool Isometry::is_parabolic(double tol) const {
  Cx tr = m_.a + m_.d;
  return std::abs(tr * tr - Cx(4.0)) <= tol && !is_identity(tol);
}

Mat2c Isometry::canonical() const {
  const Cx* entries[4] = {&m_.a, &m_.b, &m_.c, &m_.d};
  Cx lead(0.0);
  for (const Cx* e : entries) {
    if (std::abs(*e) > 1e-12) {
      lead = *e;
      break;
    }
  }
  bool flip;
  if (std::fabs(lead.real()) > 1e-12 * std::abs(lead))
    flip = lead.real() < 0.0;
  else
    flip = lead.imag() < 0.0;
  if (!flip) return m_;
  return {-m_.a, -m_.b, -m_.c, -m_.d};
}

Isometry Isometry::translation(int dim, Cx delta) {
  if (dim == 2 && std::fabs(delta.imag()) > 0.0)
    throw std::invalid_argument("translation: d=2 requires real offset");
  return from_halfspace(dim, {Cx(1.0), delta, Cx(0.0), Cx(1.0)});
}

Isometry Isometry::inversion(int dim) {
  return from_halfspace(dim, {Cx(0.0), Cx(-1.0), Cx(1.0), Cx(0.0)});
}

Isometry Isometry::dilation(int dim, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("dilation: factor must be positive");
  double s = std::sqrt(factor);
  return from_halfspace(dim, {Cx(s), Cx(0.0), Cx(0.0), Cx(1.0 / s)});
}

Isometry Isometry::rotation_disk(double theta) {
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return from_halfspace(2, {Cx(c), Cx(s), Cx(-s), Cx(c)});
}

Isometry Isometry::rotation_axis(double theta) {
  Cx e(std::cos(theta / 2.0), std::sin(theta / 2.0));
  return from_halfspace(3, {e, Cx(0.0), Cx(0.0), std::conj(e)});
}

}  // namespace horolab
