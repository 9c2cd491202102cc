#include "horolab/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace horolab {

namespace gauge_basis {

double eval(int i, double t) {
  switch (i) {
    case 0: return t;
    case 1: return std::log(kShiftLog + t);
    case 2: return std::log(std::log(kShiftLogLog + t));
    case 3: return std::log(std::log(std::log(kShiftLog34 + t)));
    case 4: return std::log(std::log(std::log(std::log(kShiftLog34 + t))));
    case 5: return 1.0;
    default: throw std::domain_error("gauge basis index");
  }
}

double deriv(int i, double t) {
  switch (i) {
    case 0: return 1.0;
    case 1: return 1.0 / (kShiftLog + t);
    case 2: {
      double a = kShiftLogLog + t;
      return 1.0 / (a * std::log(a));
    }
    case 3: {
      double a = kShiftLog34 + t;
      double l1 = std::log(a), l2 = std::log(l1);
      return 1.0 / (a * l1 * l2);
    }
    case 4: {
      double a = kShiftLog34 + t;
      double l1 = std::log(a), l2 = std::log(l1), l3 = std::log(l2);
      return 1.0 / (a * l1 * l2 * l3);
    }
    case 5: return 0.0;
    default: throw std::domain_error("gauge basis index");
  }
}

}  // namespace gauge_basis

double GaugeSpec::Psi(double t) const {
  double s = 0.0;
  for (int i = 0; i < 6; ++i)
    if (c[static_cast<size_t>(i)] != 0.0) s += c[static_cast<size_t>(i)] * gauge_basis::eval(i, t);
  return s;
}

double GaugeSpec::Psi_prime(double t) const {
  double s = 0.0;
  for (int i = 0; i < 5; ++i)
    if (c[static_cast<size_t>(i)] != 0.0) s += c[static_cast<size_t>(i)] * gauge_basis::deriv(i, t);
  return s;
}

double GaugeSpec::log_psi(double r) const {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("psi: r outside (0,1)");
  return log_psi_of_u(-std::log(r));
}

bool GaugeSpec::psi_bounded() const {
  for (int i = 0; i < 5; ++i)
    if (c[static_cast<size_t>(i)] != 0.0) return false;
  return true;
}

bool GaugeSpec::increasing_near_zero(double r_lo, double r_hi, int samples) const {
  double u_hi = -std::log(r_lo), u_lo = -std::log(r_hi);
  double prev = log_psi_of_u(u_hi);
  // decreasing in u <=> increasing in r
  for (int i = 1; i <= samples; ++i) {
    double u = u_hi + (u_lo - u_hi) * i / samples;
    double v = log_psi_of_u(u);
    if (v < prev - 1e-12) return false;
    prev = v;
  }
  return true;
}

GaugeSpec GaugeSpec::pure_power(double delta) {
  GaugeSpec g;
  g.delta = delta;
  return g;
}

GaugeSpec GaugeSpec::stratmann(double delta, double kmax) {
  if (!(2.0 * delta - kmax > 0.0))
    throw std::domain_error("stratmann gauge: requires 2 delta > kmax");
  GaugeSpec g;
  g.delta = delta;
  double kap = (kmax - delta) / (2.0 * delta - kmax);
  g.c[1] = kap;  // log(t) term, i.e. loglog(1/r)
  g.c[3] = kap;  // log3(t) term, i.e. log4(1/r)
  return g;
}

AssumptionReport check_assumptions(const GaugeSpec& g) {
  AssumptionReport r;
  r.limit_exists = true;
  r.psi_prime_limit = g.c[0];
  // eventual sign of Psi' decided by the dominant nonzero coefficient
  r.monotone_sign = 0;
  for (int i = 0; i < 5; ++i) {
    if (g.c[static_cast<size_t>(i)] != 0.0) {
      r.monotone_sign = g.c[static_cast<size_t>(i)] > 0.0 ? 1 : -1;
      break;
    }
  }
  r.eventually_monotone = true;
  return r;
}

ReducedGauge reduce_to_zero_slope(const GaugeSpec& g) {
  // psi(r) = e^{-delta u + Psi(u)} with u = log(1/r); moving c_lin*u into the
  // power gives delta' = delta - c_lin, pointwise exactly.
  ReducedGauge out;
  out.gauge = g;
  out.gauge.delta = g.delta - g.c[0];
  out.gauge.c[0] = 0.0;
  out.exponent_shift = -g.c[0];
  return out;
}

DerivedGaugeFamily::DerivedGaugeFamily(const GaugeSpec& g, double k_p)
    : g_(g), k_(k_p), u0_(0.0) {
  if (g.c[0] != 0.0)
    throw std::domain_error("derived_functions: requires c_lin = 0 (reduce first)");
  if (std::fabs(k_p - g.delta) < 1e-12)
    throw std::domain_error("derived_functions: degenerate rank k_p = delta");
  // certify F' = 1 - Psi'/(k-delta) > 0 for u >= u0 via the decreasing bound
  // |Psi'(u)| <= sum |c_i| b_i'(u)
  double gap = std::fabs(k_ - g_.delta);
  auto bound = [this](double u) {
    double s = 0.0;
    for (int i = 1; i < 5; ++i)
      s += std::fabs(g_.c[static_cast<size_t>(i)]) * gauge_basis::deriv(i, u);
    return s;
  };
  double u = 0.0;
  while (bound(u) >= 0.99 * gap) {
    u = u == 0.0 ? 0.5 : u * 2.0;
    if (u > 1e9)
      throw NumericError("derived_functions: cannot certify monotonicity of theta_p");
  }
  u0_ = u;
}

double DerivedGaugeFamily::theta_inverse_u(double v) const {
  double f0 = F(u0_);
  if (v < f0 - 1e-12)
    throw NumericError(
        "theta_p inverse: target " + std::to_string(v) +
        " below certified monotone range (F(u0) = " + std::to_string(f0) + ")");
  // fixed-point w = v + Psi(w)/(k-delta); contraction since |Psi'| < |k-delta|
  double w = std::max(u0_, v);
  for (int it = 0; it < 200; ++it) {
    double next = v + g_.Psi(w) / (k_ - g_.delta);
    if (next < u0_) next = u0_;
    if (std::fabs(next - w) <= 1e-13 * std::max(1.0, std::fabs(w))) return next;
    w = next;
  }
  // bisection fallback
  double lo = u0_, hi = std::max(u0_ + 1.0, v + 1.0);
  while (F(hi) < v) {
    hi *= 2.0;
    if (hi > 1e12) throw NumericError("theta_p inverse: bracket expansion failed");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (F(mid) < v)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-13 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

double DerivedGaugeFamily::log_phi_alpha_of_u(double alpha, double u) const {
  if (!(alpha > 0.0)) throw std::domain_error("phi_alpha: alpha <= 0");
  double w = theta_inverse_u(u + std::log(alpha));
  return u - w;
}

double DerivedGaugeFamily::psi_p(double r) const {
  if (!(r > 0.0)) throw std::domain_error("psi_p: r <= 0");
  return std::exp(log_psi_p_of_u(-std::log(r)));
}

double DerivedGaugeFamily::theta_p(double r) const {
  if (!(r > 0.0)) throw std::domain_error("theta_p: r <= 0");
  return std::exp(log_theta_p_of_u(-std::log(r)));
}

double DerivedGaugeFamily::theta_p_inverse(double x) const {
  if (!(x > 0.0)) throw std::domain_error("theta_p_inverse: x <= 0");
  return std::exp(-theta_inverse_u(-std::log(x)));
}

double DerivedGaugeFamily::phi_alpha(double alpha, double r) const {
  if (!(r > 0.0)) throw std::domain_error("phi_alpha: r <= 0");
  return std::exp(log_phi_alpha_of_u(alpha, -std::log(r)));
}

DerivedGaugeFamily derived_functions(const GaugeSpec& g, double k_p) {
  return DerivedGaugeFamily(g, k_p);
}

DoublingReport doubling_check(const std::function<double(double)>& log_phi_of_u,
                              double C1, double u_lo, double u_hi, int base_grid) {
  if (!(C1 > 1.0)) throw std::domain_error("doubling_check: C1 must exceed 1");
  if (!(u_hi > u_lo)) throw std::domain_error("doubling_check: empty grid range");
  const double window = std::log(C1);
  DoublingReport rep;
  // Each refinement extends the grid by a factor 2 toward r -> 0 and
  // densifies proportionally: a doubling function has its sup stabilize,
  // while e.g. exp(1/r) keeps growing as the range deepens.
  for (int level = 0; level < 3; ++level) {
    double hi = u_lo + (u_hi - u_lo) * (1 << level);
    int n = base_grid << level;
    double h = (hi - u_lo) / n;
    std::vector<double> vals(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) vals[static_cast<size_t>(i)] = log_phi_of_u(u_lo + i * h);
    int span = std::max(1, static_cast<int>(window / h));
    double sup = 0.0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= std::min(n, i + span); ++j)
        sup = std::max(sup, std::fabs(vals[static_cast<size_t>(j)] - vals[static_cast<size_t>(i)]));
    rep.log_c2_levels[static_cast<size_t>(level)] = sup;
  }
  rep.log_c2 = rep.log_c2_levels[2];
  double growth1 = rep.log_c2_levels[1] - rep.log_c2_levels[0];
  double growth2 = rep.log_c2_levels[2] - rep.log_c2_levels[1];
  // stable when deepening does not increase C2 by more than factor 1.1
  rep.is_doubling = std::isfinite(rep.log_c2) &&
                    growth1 <= std::log(1.1) + 1e-12 &&
                    growth2 <= std::log(1.1) + 1e-12;
  return rep;
}

ScalingLimitReport scaling_limit_check(const GaugeSpec& g, double lambda,
                                       const std::vector<double>& r_grid) {
  if (!(lambda > 0.0)) throw std::domain_error("scaling_limit_check: lambda <= 0");
  ScalingLimitReport rep;
  rep.precondition_met = g.c[0] == 0.0;
  double target = std::pow(lambda, g.delta);
  std::vector<double> rs = r_grid;
  std::sort(rs.begin(), rs.end());
  bool first = true;
  for (double r : rs) {
    if (!(r > 0.0 && r < 1.0 && lambda * r < 1.0)) continue;
    double ratio = std::exp(g.log_psi(lambda * r) - g.log_psi(r));
    double dev = std::fabs(ratio - target);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (first) {
      rep.dev_smallest_r = dev;
      first = false;
    }
    rep.dev_largest_r = dev;
  }
  rep.vanishing = rep.dev_smallest_r <= 0.5 * rep.dev_largest_r + 1e-15;
  return rep;
}

}  // namespace horolab
