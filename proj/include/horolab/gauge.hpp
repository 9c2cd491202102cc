// Gauge-function algebra. A gauge is psi(r) = r^delta exp(Psi(log(1/r)))
// with Psi expressed over the iterated-logarithm basis
//
//   b1(t) = t,            b2(t) = log(e + t),      b3(t) = loglog(e^e + t),
//   b4(t) = log3(A + t),  b5(t) = log4(A + t),     b6(t) = 1,   A = exp(e^e).
//
// Every term is defined and smooth on t >= 0 (b4(0) = 1, b5(0) = 0), the
// derivative of Psi has limit c_lin, and series classification against the
// Bertrand hierarchy is exact on the coefficients.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "horolab/errors.hpp"

namespace horolab {

namespace gauge_basis {

// shift constants
inline constexpr double kShiftLog = 2.718281828459045235360287471353;      // e
inline constexpr double kShiftLogLog = 15.154262241479264190;              // e^e
inline constexpr double kShiftLog34 = 3814279.1047602205603;               // e^{e^e}

double eval(int i, double t);   // i in [0,5]
double deriv(int i, double t);  // derivative of basis term i

}  // namespace gauge_basis

struct GaugeSpec {
  double delta = 1.0;
  // c[0]=c_lin, c[1]=c_log, c[2]=c_loglog, c[3]=c_logloglog, c[4]=c_log4, c[5]=c_const
  std::array<double, 6> c{0, 0, 0, 0, 0, 0};

  double Psi(double t) const;
  double Psi_prime(double t) const;

  // log psi as a function of u = log(1/r) >= 0: -delta*u + Psi(u)
  double log_psi_of_u(double u) const { return -delta * u + Psi(u); }
  double log_psi(double r) const;  // r in (0,1), throws outside
  double psi(double r) const { return std::exp(log_psi(r)); }

  bool psi_bounded() const;  // Psi bounded <=> all non-constant coefficients zero

  // numeric monotonicity check of psi on a log grid in (r_lo, r_hi)
  bool increasing_near_zero(double r_lo = 1e-12, double r_hi = 1e-2,
                            int samples = 240) const;

  static GaugeSpec pure_power(double delta);
  // The conjectured gauge: Psi(t) = (kmax-delta)/(2delta-kmax) (log t + log3 t).
  static GaugeSpec stratmann(double delta, double kmax);
};

struct AssumptionReport {
  bool eventually_monotone = true;
  int monotone_sign = 0;  // +1 eventually increasing, -1 decreasing, 0 constant
  bool limit_exists = true;
  double psi_prime_limit = 0.0;  // = c_lin
};

AssumptionReport check_assumptions(const GaugeSpec& g);

// Absorb the linear coefficient into the exponent: delta' = delta - c_lin,
// Psi~ = Psi - c_lin * t, leaving psi pointwise unchanged.
struct ReducedGauge {
  GaugeSpec gauge;        // c_lin = 0
  double exponent_shift;  // delta' - delta = -c_lin
};
ReducedGauge reduce_to_zero_slope(const GaugeSpec& g);

// Derived family of Lemma-type transforms for a cusp rank k != delta:
//   psi_p(r) = exp(-Psi(log(1/r)) / (k - delta)),
//   theta_p(r) = r / psi_p(r),
//   phi_{p,alpha}(r) = theta_p^{-1}(r/alpha) / r.
// All evaluators work in u = log(1/r); theta inversion is a certified
// monotone solve of F(w) = w - Psi(w)/(k-delta) = v on w >= u0.
class DerivedGaugeFamily {
 public:
  DerivedGaugeFamily(const GaugeSpec& g, double k_p);

  double k() const { return k_; }
  double delta() const { return g_.delta; }
  double Delta() const { return 2.0 * g_.delta - k_; }
  double monotone_from_u() const { return u0_; }

  double log_psi_p_of_u(double u) const { return -g_.Psi(u) / (k_ - g_.delta); }
  // F(u) = -log theta_p(e^{-u})
  double F(double u) const { return u - g_.Psi(u) / (k_ - g_.delta); }
  double log_theta_p_of_u(double u) const { return -F(u); }
  // solve F(w) = v for w >= u0; throws NumericError when out of range
  double theta_inverse_u(double v) const;
  double log_phi_alpha_of_u(double alpha, double u) const;

  // r-space wrappers
  double psi_p(double r) const;
  double theta_p(double r) const;
  double theta_p_inverse(double x) const;
  double phi_alpha(double alpha, double r) const;

 private:
  GaugeSpec g_;
  double k_;
  double u0_;
};

DerivedGaugeFamily derived_functions(const GaugeSpec& g, double k_p);

struct DoublingReport {
  bool is_doubling = false;
  double log_c2 = 0.0;  // estimate at the finest refinement
  std::array<double, 3> log_c2_levels{0, 0, 0};
};

// Estimates sup |log phi(y) - log phi(x)| over grid pairs with
// |log(y/x)| <= log C1 at three refinements, each extending the u-grid by a
// factor 2 deeper toward r -> 0; doubling when the estimates stay finite
// and stable within factor 1.1 under the deepening.
DoublingReport doubling_check(const std::function<double(double)>& log_phi_of_u,
                              double C1, double u_lo, double u_hi,
                              int base_grid = 240);

struct ScalingLimitReport {
  double max_deviation = 0.0;
  double dev_smallest_r = 0.0;
  double dev_largest_r = 0.0;
  bool vanishing = false;        // deviation decreases toward r -> 0
  bool precondition_met = true;  // c_lin == 0
};

// Deviation of psi(lambda r)/psi(r) from lambda^delta over an r grid.
ScalingLimitReport scaling_limit_check(const GaugeSpec& g, double lambda,
                                       const std::vector<double>& r_grid);

}  // namespace horolab
