// Adaptive Gauss-Kronrod quadrature plus improper integrals of positive
// decreasing integrands over (0, inf) with dyadic tail bounds on both ends.
// Used by the inverse-integral identity check: for a decreasing
// homeomorphism f of (0,inf), the integrals of f and f^{-1} coincide.

#pragma once

#include <functional>

#include "horolab/errors.hpp"

namespace horolab {

using RealFn = std::function<double(double)>;

// One G7-K15 panel; err is the scaled Gauss/Kronrod discrepancy.
double quad_g7k15(const RealFn& f, double a, double b, double& err);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

QuadResult adaptive_integrate(const RealFn& f, double a, double b,
                              double rel_tol = 1e-10, double abs_tol = 1e-14,
                              int max_intervals = 4000);

struct ImproperResult {
  double value = 0.0;
  double tail_bound_zero = 0.0;  // bound on the mass dropped near 0
  double tail_bound_inf = 0.0;   // bound on the mass dropped at infinity
  bool converged = false;
};

// Integral over (0, inf) of a positive decreasing f; monotonicity is
// sample-verified (domain error otherwise). Tail bounds use
// int_{a}^{2a} f <= a f(a).
ImproperResult integrate_decreasing_0_inf(const RealFn& f, double abs_tol = 1e-9);

// Numeric inverse of a strictly decreasing positive f via log-space bisection.
RealFn numeric_inverse_decreasing(const RealFn& f);

struct InverseIntegralReport {
  double integral_f = 0.0;
  double integral_f_inverse = 0.0;
  double relative_gap = 0.0;
};

InverseIntegralReport inverse_integral_check(const RealFn& f, const RealFn& f_inverse,
                                             double abs_tol = 1e-9);

}  // namespace horolab
