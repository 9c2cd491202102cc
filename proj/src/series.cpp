#include "horolab/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace horolab {

namespace {

using Rat = boost::multiprecision::cpp_rational;

std::string fmt_rat(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    return os.str();
  }
  std::ostringstream os;
  os.precision(10);
  os << r.convert_to<double>();
  return os.str();
}

// summand = exp(-e1 t) * t^{-e2} (log t)^{-e3} (loglog t)^{-e4} (log3 t)^{-e5}
std::string render_summand(const std::array<Rat, 5>& e) {
  static const char* names[5] = {"exp(t)", "t", "log(t)", "loglog(t)", "logloglog(t)"};
  std::string num, den;
  auto append = [](std::string& s, const std::string& factor) {
    if (!s.empty()) s += "*";
    s += factor;
  };
  for (int i = 0; i < 5; ++i) {
    const Rat& ei = e[static_cast<size_t>(i)];
    if (ei == 0) continue;
    Rat mag = ei > 0 ? ei : Rat(-ei);
    std::string factor;
    if (i == 0) {
      factor = "exp(" + fmt_rat(mag) + "*t)";
    } else {
      factor = names[i];
      if (mag != 1) factor += "^" + fmt_rat(mag);
    }
    append(ei > 0 ? den : num, factor);
  }
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  return num + "/(" + den + ")";
}

SeriesDecision classify_normal_form(const std::array<Rat, 5>& e, double multiplier) {
  SeriesDecision d;
  d.multiplier = multiplier;
  for (int i = 0; i < 5; ++i)
    d.exponents[static_cast<size_t>(i)] = e[static_cast<size_t>(i)].convert_to<double>();
  d.reduced_summand = render_summand(e);

  // level 1: exponential factor
  if (e[0] != 0) {
    d.decided_level = 1;
    d.verdict = e[0] > 0 ? Convergence::Converges : Convergence::Diverges;
    d.steps.push_back(std::string("level 1: e1 = ") + fmt_rat(e[0]) +
                      (e[0] > 0 ? " > 0 -> converges (exponential decay)"
                                : " < 0 -> diverges (exponential growth)"));
    return d;
  }
  d.steps.push_back("level 1: e1 = 0, descend");
  // levels 2..5: Bertrand thresholds, all equal to 1
  for (int i = 1; i < 5; ++i) {
    const Rat& ei = e[static_cast<size_t>(i)];
    std::string label = "level " + std::to_string(i + 1) + ": e" + std::to_string(i + 1) +
                        " = " + fmt_rat(ei);
    if (ei > 1) {
      d.decided_level = i + 1;
      d.verdict = Convergence::Converges;
      d.steps.push_back(label + " > 1 -> converges");
      return d;
    }
    if (ei < 1) {
      d.decided_level = i + 1;
      d.verdict = Convergence::Diverges;
      d.steps.push_back(label + " < 1 -> diverges");
      return d;
    }
    d.steps.push_back(label + " = 1 (threshold), descend");
  }
  d.decided_level = 0;
  d.verdict = Convergence::Undecided;
  d.steps.push_back("all levels at threshold within basis depth -> Undecided");
  return d;
}

}  // namespace

const char* to_string(Convergence v) {
  switch (v) {
    case Convergence::Diverges: return "Diverges";
    case Convergence::Converges: return "Converges";
    default: return "Undecided";
  }
}

const char* to_string(MeasureValue v) {
  switch (v) {
    case MeasureValue::Zero: return "Zero";
    case MeasureValue::Infinite: return "Infinite";
    case MeasureValue::NotApplicable: return "NotApplicable";
    default: return "Undecided";
  }
}

SeriesDecision classify_hausdorff_series(const GaugeSpec& g, double kmax) {
  if (!(g.delta < kmax))
    throw std::domain_error("classify_hausdorff_series: requires delta < kmax");
  Rat delta(g.delta), k(kmax);
  Rat mult = (2 * delta - k) / (k - delta);
  std::array<Rat, 5> e;
  for (int i = 0; i < 5; ++i) e[static_cast<size_t>(i)] = mult * Rat(g.c[static_cast<size_t>(i)]);
  SeriesDecision d = classify_normal_form(e, mult.convert_to<double>());
  switch (d.verdict) {
    case Convergence::Diverges: d.consequence = MeasureValue::Zero; break;
    case Convergence::Converges: d.consequence = MeasureValue::Infinite; break;
    default: d.consequence = MeasureValue::Undecided; break;
  }
  return d;
}

SeriesDecision classify_packing_series(const GaugeSpec& g, double kmin) {
  if (!(g.delta > kmin))
    throw std::domain_error("classify_packing_series: requires delta > kmin");
  Rat delta(g.delta), k(kmin);
  Rat mult = (2 * delta - k) / (delta - k);
  std::array<Rat, 5> e;
  // summand exp(+mult Psi) = exp(-sum (-mult c_i) b_i)
  for (int i = 0; i < 5; ++i) e[static_cast<size_t>(i)] = -mult * Rat(g.c[static_cast<size_t>(i)]);
  SeriesDecision d = classify_normal_form(e, mult.convert_to<double>());
  switch (d.verdict) {
    case Convergence::Converges: d.consequence = MeasureValue::Zero; break;
    case Convergence::Diverges: d.consequence = MeasureValue::Infinite; break;
    default: d.consequence = MeasureValue::Undecided; break;
  }
  return d;
}

namespace {

// streaming log-sum-exp accumulator
struct LogSum {
  double max_v = -std::numeric_limits<double>::infinity();
  double scaled = 0.0;
  void add(double x) {
    if (scaled == 0.0) {
      max_v = x;
      scaled = 1.0;
      return;
    }
    if (x <= max_v) {
      scaled += std::exp(x - max_v);
    } else {
      scaled = scaled * std::exp(max_v - x) + 1.0;
      max_v = x;
    }
  }
  double log_value() const { return max_v + std::log(scaled); }
};

}  // namespace

std::vector<double> sigma_p_partial(const GaugeSpec& g, double k_p,
                                    const std::vector<int64_t>& checkpoints) {
  if (std::fabs(k_p - g.delta) < 1e-12)
    throw std::domain_error("sigma_p_partial: k_p = delta boundary case");
  double coeff = (2.0 * g.delta - k_p) / (k_p - g.delta);
  std::vector<double> out;
  out.reserve(checkpoints.size());
  LogSum acc;
  size_t ci = 0;
  int64_t max_n = checkpoints.empty() ? 0 : checkpoints.back();
  for (int64_t t = 1; t <= max_n; ++t) {
    acc.add(-coeff * g.Psi(static_cast<double>(t)));
    while (ci < checkpoints.size() && checkpoints[ci] == t) {
      out.push_back(acc.log_value());
      ++ci;
    }
  }
  return out;
}

std::vector<double> sigma_p_alpha_partial(const DerivedGaugeFamily& fam,
                                          double alpha, double lambda,
                                          const std::vector<int64_t>& checkpoints) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::domain_error("sigma_p_alpha_partial: lambda outside (0,1)");
  double L = -std::log(lambda);
  double D = fam.Delta();
  std::vector<double> out;
  out.reserve(checkpoints.size());
  LogSum acc;
  size_t ci = 0;
  int64_t max_n = checkpoints.empty() ? 0 : checkpoints.back();
  // theta_p is a germ at 0: indices whose inversion target falls outside
  // the certified monotone range are skipped (the lower summation bound is
  // irrelevant to convergence)
  double v_min = fam.F(fam.monotone_from_u());
  for (int64_t n = 1; n <= max_n; ++n) {
    double v = static_cast<double>(n) * L + std::log(alpha);
    if (v >= v_min) acc.add(D * fam.log_phi_alpha_of_u(alpha, static_cast<double>(n) * L));
    while (ci < checkpoints.size() && checkpoints[ci] == n) {
      out.push_back(acc.log_value());
      ++ci;
    }
  }
  return out;
}

NumericClassification numeric_series_classification(
    const std::function<double(double)>& log_term, double N) {
  if (!(N >= 8.0)) throw std::domain_error("numeric_series_classification: N too small");
  NumericClassification r;
  double a = log_term(N / 2.0), b = log_term(N);
  r.exponent_estimate = (a - b) / std::log(2.0);
  r.verdict = r.exponent_estimate > 1.0 ? Convergence::Converges : Convergence::Diverges;
  r.low_confidence = std::fabs(r.exponent_estimate - 1.0) < 0.05;
  return r;
}

}  // namespace horolab
