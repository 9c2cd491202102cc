#include "horolab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace horolab {

double quad_g7k15(const RealFn& f, double a, double b, double& err) {
  static const double nw[8][3] = {
      {0.000000000000000, 0.417959183673469, 0.209482141084728},
      {0.405845151377397, 0.381830050505119, 0.190350578064785},
      {0.741531185599394, 0.279705391489277, 0.140653259715525},
      {0.949107912342759, 0.129484966168870, 0.063092092629979},
      {0.207784955007898, 0.0, 0.204432940075298},
      {0.586087235467691, 0.0, 0.169004726639267},
      {0.864864423359769, 0.0, 0.104790010322250},
      {0.991455371120813, 0.0, 0.022935322010529}};

  const double x0 = (a + b) * 0.5;
  const double m = b - x0;

  double y0 = f(x0);
  double g7 = nw[0][1] * y0;
  double k15 = nw[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    double mx = m * nw[i][0];
    double yi = f(x0 + mx) + f(x0 - mx);
    k15 += nw[i][2] * yi;
    g7 += nw[i][1] * yi;
  }
  g7 *= m;
  k15 *= m;
  err = 200.0 * std::fabs(g7 - k15);
  err *= std::sqrt(err);
  return k15;
}

QuadResult adaptive_integrate(const RealFn& f, double a, double b, double rel_tol,
                              double abs_tol, int max_intervals) {
  QuadResult out;
  std::vector<std::pair<double, double>> stack;
  stack.emplace_back(a, b);
  int used = 1;
  double sum = 0.0, errsum = 0.0;
  while (!stack.empty()) {
    auto [ai, bi] = stack.back();
    stack.pop_back();
    double err;
    double s = quad_g7k15(f, ai, bi, err);
    if (err < rel_tol * std::fabs(s) || err < abs_tol || bi - ai < 1e-15 * std::fabs(bi)) {
      sum += s;
      errsum += err;
      continue;
    }
    if (used + 2 > max_intervals) {
      out.value = sum + s;
      out.error_estimate = errsum + err;
      out.converged = false;
      return out;
    }
    used += 2;
    double mid = 0.5 * (ai + bi);
    stack.emplace_back(ai, mid);
    stack.emplace_back(mid, bi);
  }
  out.value = sum;
  out.error_estimate = errsum;
  out.converged = true;
  return out;
}

namespace {

void verify_decreasing(const RealFn& f) {
  double prev = f(1e-8);
  for (double x = 1e-7; x <= 1e8; x *= 10.0) {
    double v = f(x);
    if (v > prev * (1.0 + 1e-9) + 1e-300)
      throw std::domain_error("integrate_decreasing_0_inf: samples not decreasing");
    prev = v;
  }
}

}  // namespace

ImproperResult integrate_decreasing_0_inf(const RealFn& f, double abs_tol) {
  verify_decreasing(f);
  ImproperResult out;
  double sum = 0.0;
  bool inner_ok = true;

  // central part [2^-60, 2^60] dyadically, stopping early when both the
  // interval contribution and the monotone tail bound fall under tolerance
  double tail_inf = 0.0;
  int k_hi = 0;
  for (int k = 0; k <= 60; ++k) {
    double a = std::ldexp(1.0, k), b = std::ldexp(1.0, k + 1);
    QuadResult q = adaptive_integrate(f, a, b, 1e-11, abs_tol * 1e-3, 2000);
    inner_ok = inner_ok && q.converged;
    sum += q.value;
    k_hi = k + 1;
    // tail bound from 2^{k+1}: sum_j 2^j f(2^j)
    tail_inf = 0.0;
    bool bounded = true;
    double prev_term = std::numeric_limits<double>::infinity();
    for (int j = k + 1; j <= k + 200; ++j) {
      double x = std::ldexp(1.0, j);
      double term = x * f(x);
      if (!(term < prev_term) && term > abs_tol * 1e-6) {
        bounded = false;  // tail terms not decaying yet
        break;
      }
      prev_term = term;
      tail_inf += term;
      if (term < abs_tol * 1e-6) break;
    }
    if (bounded && tail_inf < abs_tol * 0.25) break;
    if (k == 60) inner_ok = false;
  }
  (void)k_hi;

  double tail_zero = 0.0;
  for (int k = 1; k <= 120; ++k) {
    double a = std::ldexp(1.0, -k), b = std::ldexp(1.0, -k + 1);
    QuadResult q = adaptive_integrate(f, a, b, 1e-11, abs_tol * 1e-3, 2000);
    inner_ok = inner_ok && q.converged;
    sum += q.value;
    // bound on int_0^{2^-k}: sum_j 2^{-j-1} f(2^{-j-1})
    tail_zero = 0.0;
    bool bounded = true;
    double prev_term = std::numeric_limits<double>::infinity();
    for (int j = k; j <= k + 400; ++j) {
      double x = std::ldexp(1.0, -j - 1);
      double term = x * f(x);
      if (term > prev_term * (1.0 + 1e-12) && term > abs_tol * 1e-6) {
        // f grows toward 0 faster than 1/x: keep integrating inward
        bounded = false;
        break;
      }
      prev_term = term;
      tail_zero += term;
      if (term < abs_tol * 1e-6) break;
    }
    if (bounded && tail_zero < abs_tol * 0.25) break;
    if (k == 120) inner_ok = false;
  }

  out.value = sum;
  out.tail_bound_zero = tail_zero;
  out.tail_bound_inf = tail_inf;
  out.converged = inner_ok && (tail_zero + tail_inf) < abs_tol;
  return out;
}

RealFn numeric_inverse_decreasing(const RealFn& f) {
  return [f](double y) {
    if (!(y > 0.0)) throw std::domain_error("numeric inverse: y <= 0");
    double lo = 1e-18, hi = 1e18;
    // expand until f(lo) >= y >= f(hi)
    int guard = 0;
    while (f(lo) < y) {
      lo *= 1e-3;
      if (++guard > 120) throw NumericError("numeric inverse: bracket failure near 0");
    }
    guard = 0;
    while (f(hi) > y) {
      hi *= 1e3;
      if (++guard > 120) throw NumericError("numeric inverse: bracket failure at infinity");
    }
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < 120; ++i) {
      double mid = 0.5 * (llo + lhi);
      if (f(std::exp(mid)) >= y)
        llo = mid;
      else
        lhi = mid;
    }
    return std::exp(0.5 * (llo + lhi));
  };
}

InverseIntegralReport inverse_integral_check(const RealFn& f, const RealFn& f_inverse,
                                             double abs_tol) {
  InverseIntegralReport rep;
  ImproperResult a = integrate_decreasing_0_inf(f, abs_tol);
  ImproperResult b = integrate_decreasing_0_inf(f_inverse, abs_tol);
  rep.integral_f = a.value;
  rep.integral_f_inverse = b.value;
  double denom = std::max(std::fabs(a.value), std::fabs(b.value));
  rep.relative_gap = denom > 0 ? std::fabs(a.value - b.value) / denom : 0.0;
  return rep;
}

}  // namespace horolab
