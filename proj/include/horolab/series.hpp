// Series classification for the Hausdorff/packing dichotomy. Summands of
// the form exp(-sum_i e_i b_i(t)) over the iterated-log basis are decided
// against the Bertrand hierarchy (threshold 1 at every level) by exact
// rational comparison of the exponents; a tie at every level is reported
// as an explicit Undecided verdict rather than a guess.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "horolab/gauge.hpp"

namespace horolab {

enum class Convergence { Diverges, Converges, Undecided };
enum class MeasureValue { Zero, Infinite, NotApplicable, Undecided };

const char* to_string(Convergence v);
const char* to_string(MeasureValue v);

struct SeriesDecision {
  Convergence verdict = Convergence::Undecided;
  MeasureValue consequence = MeasureValue::Undecided;
  double multiplier = 0.0;           // series multiplier applied to Psi
  std::array<double, 5> exponents{}; // e1..e5: summand = exp(-sum e_i b_i(t))
  int decided_level = -1;            // 1..5 deciding level; 0 = all at threshold
  std::string reduced_summand;       // canonical rendering, e.g. "1/(t*loglog(t))"
  std::vector<std::string> steps;
};

// Theorem-series classifiers. The exponential level e1 handles gauges with
// c_lin != 0 directly (no reduction needed); with c_lin = 0 this is the
// plain Bertrand comparison on the remaining coefficients.
//   Hausdorff (delta < kmax): summand exp(-((2d-kmax)/(kmax-d)) Psi(t));
//     diverges -> H^psi(mu) = 0, converges -> infinity.
//   Packing (delta > kmin): summand exp(+((2d-kmin)/(d-kmin)) Psi(t));
//     converges -> P^psi(mu) = 0, diverges -> infinity.
SeriesDecision classify_hausdorff_series(const GaugeSpec& g, double kmax);
SeriesDecision classify_packing_series(const GaugeSpec& g, double kmin);

// log partial sums of Sigma_p = sum_{t>=1} exp(-(Delta_p/(k_p-delta)) Psi(t))
// at the requested checkpoints (ascending).
std::vector<double> sigma_p_partial(const GaugeSpec& g, double k_p,
                                    const std::vector<int64_t>& checkpoints);

// log partial sums of Sigma_{p,alpha} = sum_{n>=1} phi_{p,alpha}(lambda^n)^{Delta_p}.
std::vector<double> sigma_p_alpha_partial(const DerivedGaugeFamily& fam,
                                          double alpha, double lambda,
                                          const std::vector<int64_t>& checkpoints);

struct NumericClassification {
  Convergence verdict = Convergence::Undecided;
  double exponent_estimate = 0.0;  // slope of -log a_t vs log t near N
  bool low_confidence = false;
};

// Heuristic classification for tabulated summands: local p-series exponent
// between N/2 and N compared with 1. Flagged low-confidence near the
// threshold; intended for gauges outside the coefficient basis and for
// cross-checking the symbolic verdicts.
NumericClassification numeric_series_classification(
    const std::function<double(double)>& log_term, double N);

}  // namespace horolab
