#include "horolab/excursion.hpp"

#include <algorithm>
#include <cmath>

#include "horolab/rng.hpp"

namespace horolab {

double ExcursionModel::scale_step() const { return -std::log(lambda); }

void ExcursionModel::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw ConfigurationError("ExcursionModel: lambda outside (0,1)");
  if (dim != 2 && dim != 3) throw ConfigurationError("ExcursionModel: dim must be 2 or 3");
  if (cusps.empty()) throw ConfigurationError("ExcursionModel: no cusps");
  if (!(delta > 0.0)) throw ConfigurationError("ExcursionModel: delta <= 0");
  for (const auto& c : cusps) {
    if (c.rank < 1 || c.rank > dim - 1)
      throw ConfigurationError("ExcursionModel: cusp rank outside [1, d-1]");
    if (!(c.intensity >= 0.0 && c.intensity <= 1.0))
      throw ConfigurationError("ExcursionModel: intensity outside [0,1]");
    if (std::fabs(2.0 * delta - c.rank) < 1e-12)
      throw ConfigurationError("ExcursionModel: Delta_p = 0 boundary case excluded");
    if (!(2.0 * delta - c.rank > 0.0))
      throw ConfigurationError("ExcursionModel: Delta_p < 0 (delta <= k_p/2 impossible)");
  }
}

void for_each_excursion(const ExcursionModel& model, int64_t n_scales, uint64_t seed,
                        const std::function<void(const ExcursionEvent&)>& f) {
  model.validate();
  const double L = model.scale_step();
  double last_exit = -std::numeric_limits<double>::infinity();
  std::vector<ExcursionEvent> slot;
  for (int64_t n = 1; n <= n_scales; ++n) {
    slot.clear();
    for (size_t p = 0; p < model.cusps.size(); ++p) {
      const CuspModel& cusp = model.cusps[p];
      Rng rng = Rng::stream(seed, static_cast<uint64_t>(n), p);
      if (rng.uniform() >= cusp.intensity) continue;
      double rate = 2.0 * model.delta - static_cast<double>(cusp.rank);
      double depth = rng.exponential(rate);
      ExcursionEvent ev;
      ev.cusp = static_cast<int>(p);
      ev.scale = n;
      // jittered entry within the scale slot; conflict resolution by entry
      // order stays symmetric between cusps
      ev.t_entry = (static_cast<double>(n) + rng.uniform()) * L;
      ev.t_peak = ev.t_entry + depth;
      ev.t_exit = ev.t_entry + 2.0 * depth;
      ev.depth = depth;
      slot.push_back(ev);
    }
    std::sort(slot.begin(), slot.end(),
              [](const ExcursionEvent& a, const ExcursionEvent& b) {
                return a.t_entry < b.t_entry;
              });
    for (const auto& ev : slot) {
      if (ev.t_entry < last_exit) continue;  // would overlap: dropped
      last_exit = ev.t_exit;
      f(ev);
    }
  }
}

std::vector<ExcursionEvent> simulate_excursions(const ExcursionModel& model,
                                                int64_t n_scales, uint64_t seed) {
  std::vector<ExcursionEvent> events;
  for_each_excursion(model, n_scales, seed,
                     [&events](const ExcursionEvent& ev) { events.push_back(ev); });
  return events;
}

void validate_event_stream(const std::vector<ExcursionEvent>& events) {
  for (size_t i = 1; i < events.size(); ++i)
    if (events[i].t_entry < events[i - 1].t_exit - 1e-12)
      throw InvariantViolationError("excursion events overlap in time");
}

DensityTrace synthetic_density_trace(const ExcursionModel& model, const GaugeSpec& g,
                                     int64_t n_scales, uint64_t seed) {
  if (std::fabs(g.delta - model.delta) > 1e-12)
    throw std::domain_error("synthetic_density_trace: gauge delta must match model delta");
  std::vector<ExcursionEvent> events = simulate_excursions(model, n_scales, seed);
  validate_event_stream(events);
  DensityTrace tr;
  tr.source = DensityTrace::Source::Synthetic;
  const double L = model.scale_step();
  auto baseline = [&](double t) { tr.push(t, -g.Psi(t), true); };
  double t_prev = 0.0;
  for (const auto& ev : events) {
    double k = static_cast<double>(model.cusps[static_cast<size_t>(ev.cusp)].rank);
    if (ev.t_entry > t_prev + 1e-12) baseline(0.5 * (t_prev + ev.t_entry));
    if (ev.t_entry > t_prev) baseline(ev.t_entry);
    tr.push(ev.t_peak, ev.depth * (k - model.delta) - g.Psi(ev.t_peak), true);
    if (ev.t_exit > ev.t_peak) baseline(ev.t_exit);
    t_prev = ev.t_exit;
  }
  double t_end = static_cast<double>(n_scales) * L;
  if (t_end > t_prev) baseline(t_end);
  return tr;
}

namespace {

struct WindowAgg {
  double max_v = -std::numeric_limits<double>::infinity();
  double min_v = std::numeric_limits<double>::infinity();
  void add(double v) {
    max_v = std::max(max_v, v);
    min_v = std::min(min_v, v);
  }
};

double median3(double a, double b, double c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

}  // namespace

DriftVerdicts synthetic_drift_verdict(const ExcursionModel& model, const GaugeSpec& g,
                                      int64_t n_scales, uint64_t seed, double margin) {
  if (std::fabs(g.delta - model.delta) > 1e-12)
    throw std::domain_error("synthetic_drift_verdict: gauge delta must match model delta");
  const double L = model.scale_step();
  int J = 0;
  while ((int64_t(2) << J) <= n_scales) ++J;  // windows [2^j, 2^{j+1}), j = 0..J-1 complete
  const int j_lo = 4;
  if (J - 1 < j_lo + 5)
    throw InsufficientDataError("synthetic_drift_verdict: horizon too short for windows");

  std::vector<WindowAgg> win(static_cast<size_t>(J));
  // baseline samples at window edges and quarter points
  for (int j = 0; j < J; ++j) {
    double a = static_cast<double>(int64_t(1) << j) * L;
    double b = 2.0 * a;
    for (int q = 0; q <= 4; ++q) {
      double t = a + (b - a) * q / 4.0;
      win[static_cast<size_t>(j)].add(-g.Psi(t));
    }
  }
  for_each_excursion(model, n_scales, seed, [&](const ExcursionEvent& ev) {
    int j = 0;
    while ((int64_t(2) << j) <= ev.scale) ++j;
    if (j >= J) return;
    double k = static_cast<double>(model.cusps[static_cast<size_t>(ev.cusp)].rank);
    win[static_cast<size_t>(j)].add(ev.depth * (k - model.delta) - g.Psi(ev.t_peak));
  });

  DriftVerdicts out;
  out.windows = J;
  auto med_max = [&](int a, int b, int c) {
    return median3(win[static_cast<size_t>(a)].max_v, win[static_cast<size_t>(b)].max_v,
                   win[static_cast<size_t>(c)].max_v);
  };
  auto med_min = [&](int a, int b, int c) {
    return median3(win[static_cast<size_t>(a)].min_v, win[static_cast<size_t>(b)].min_v,
                   win[static_cast<size_t>(c)].min_v);
  };
  double early_max = med_max(j_lo, j_lo + 1, j_lo + 2);
  double deep_max = med_max(J - 3, J - 2, J - 1);
  double early_min = med_min(j_lo, j_lo + 1, j_lo + 2);
  double deep_min = med_min(J - 3, J - 2, J - 1);
  out.drift_max = deep_max - early_max;
  out.drift_min = deep_min - early_min;

  // upper density: window maxima drift up -> limsup = inf -> H = 0
  if (out.drift_max >= margin)
    out.hausdorff = MeasureValue::Zero;
  else if (out.drift_max <= -margin)
    out.hausdorff = MeasureValue::Infinite;
  else
    out.hausdorff = MeasureValue::Undecided;
  // lower density: window minima drift up -> liminf = inf -> P = 0
  if (out.drift_min >= margin)
    out.packing = MeasureValue::Zero;
  else if (out.drift_min <= -margin)
    out.packing = MeasureValue::Infinite;
  else
    out.packing = MeasureValue::Undecided;
  return out;
}

}  // namespace horolab
