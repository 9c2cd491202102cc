// horolab command-line front end. Subcommands drive the orbit / measure /
// gauge / dichotomy pipelines and emit reproducible CSV/JSON artifacts;
// identical (config, seed) pairs produce byte-identical outputs.
//
// Exit codes: 0 success, 2 config error, 3 insufficient data, 4 undecided
// verdict.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "horolab/config.hpp"
#include "horolab/density.hpp"
#include "horolab/excursion.hpp"
#include "horolab/gmf.hpp"
#include "horolab/io.hpp"
#include "horolab/khinchin.hpp"
#include "horolab/parallel.hpp"
#include "horolab/predictor.hpp"
#include "horolab/rng.hpp"

namespace fs = std::filesystem;
using namespace horolab;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = "out";
  uint64_t seed = 1;
  int threads = 1;
  double t_max = 10.0;
  int samples = 50;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "config file")->required();
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--threads", o.threads, "worker threads");
  cmd->add_option("--t-max", o.t_max, "orbit truncation radius");
  cmd->add_option("--samples", o.samples, "sample count");
}

OutputMeta meta_of(const ParsedConfig& cfg, const CommonOpts& o) {
  return OutputMeta{cfg.hash, o.seed};
}

const GroupSpec& need_group(const ParsedConfig& cfg) {
  if (!cfg.group) throw ConfigurationError("config does not define a group");
  return *cfg.group;
}

const GaugeSpec& need_gauge(const ParsedConfig& cfg) {
  if (!cfg.gauge) throw ConfigurationError("config does not define a gauge (delta = ...)");
  return *cfg.gauge;
}

std::string out_path(const CommonOpts& o, const std::string& name) {
  fs::create_directories(o.out_dir);
  return (fs::path(o.out_dir) / name).string();
}

int cmd_orbit(const CommonOpts& o) {
  ParsedConfig cfg = parse_config_file(o.config_path);
  OrbitBall orbit = enumerate_orbit(need_group(cfg), o.t_max, 4000000);
  write_orbit_csv(out_path(o, "orbit.csv"), orbit, meta_of(cfg, o));
  Json j = json_meta(meta_of(cfg, o));
  j["group"] = need_group(cfg).label;
  j["truncation"] = orbit.truncation;
  j["points"] = orbit.entries.size();
  j["truncated_by_cap"] = orbit.truncated_by_cap;
  write_text_file(out_path(o, "orbit_summary.json"), j.dump(2) + "\n");
  return 0;
}

int cmd_delta(const CommonOpts& o) {
  ParsedConfig cfg = parse_config_file(o.config_path);
  OrbitBall orbit = enumerate_orbit(need_group(cfg), o.t_max, 4000000);
  DeltaEstimate est = estimate_delta(orbit, o.t_max / 2.0, o.t_max);
  Json j = json_meta(meta_of(cfg, o));
  j["group"] = need_group(cfg).label;
  j["report"] = json_delta(est);
  write_text_file(out_path(o, "delta_report.json"), j.dump(2) + "\n");
  return 0;
}

int cmd_limitset(const CommonOpts& o) {
  ParsedConfig cfg = parse_config_file(o.config_path);
  auto pts = sample_limit_set(need_group(cfg), 20000, o.samples, o.seed);
  write_limitset_csv(out_path(o, "limitset.csv"), pts, meta_of(cfg, o));
  return 0;
}

int cmd_gauge_classify(const CommonOpts& o) {
  ParsedConfig cfg = parse_config_file(o.config_path);
  const GaugeSpec& g = need_gauge(cfg);
  if (!cfg.kmin || !cfg.kmax)
    throw ConfigurationError("gauge-classify needs kmin and kmax in the config");
  Verdict v = predict_theorem1(g, *cfg.kmin, *cfg.kmax);
  Json j = json_meta(meta_of(cfg, o));
  j["delta"] = g.delta;
  j["kmin"] = *cfg.kmin;
  j["kmax"] = *cfg.kmax;
  j["verdict"] = json_verdict(v);
  write_text_file(out_path(o, "verdict.json"), j.dump(2) + "\n");
  if (v.hausdorff == MeasureValue::Undecided || v.packing == MeasureValue::Undecided)
    return 4;
  return 0;
}

int cmd_gmf_check(const CommonOpts& o) {
  ParsedConfig cfg = parse_config_file(o.config_path);
  const GroupSpec& spec = need_group(cfg);
  OrbitBall orbit = enumerate_orbit(spec, o.t_max, 4000000);
  DeltaEstimate est = estimate_delta(orbit, o.t_max / 2.0, o.t_max);
  AtomicMeasure mu = patterson_measure(orbit, est.delta + 0.05, true);
  HoroballSystem sys = invariant_horoball_system(spec, std::min(o.t_max, 10.0));
  GmfContext ctx = GmfContext::from_system(est.delta, sys);

  std::vector<double> t_grid;
  for (double t = 1.0; t <= 8.0 + 1e-9; t += 0.1) t_grid.push_back(t);
  Rng rng(o.seed);
  std::vector<BoundaryPoint> etas;
  for (int i = 0; i < o.samples; ++i) etas.push_back(mu.sample(rng));

  std::vector<DensityTrace> traces(etas.size());
  parallel_for(static_cast<int>(etas.size()), o.threads, [&](int i) {
    traces[static_cast<size_t>(i)] =
        gmf_residual_scan(mu, ctx, etas[static_cast<size_t>(i)], t_grid);
  });
  write_traces_csv(out_path(o, "gmf_residuals.csv"), traces, meta_of(cfg, o));

  double band = 0.0;
  int resolved_traces = 0;
  for (const auto& tr : traces) {
    double lo = 0, hi = 0;
    bool any = false;
    for (size_t k = 0; k < tr.size(); ++k) {
      if (!tr.resolved[k]) continue;
      if (!any) {
        lo = hi = tr.value[k];
        any = true;
      } else {
        lo = std::min(lo, tr.value[k]);
        hi = std::max(hi, tr.value[k]);
      }
    }
    if (any) {
      band = std::max(band, hi - lo);
      ++resolved_traces;
    }
  }
  Json j = json_meta(meta_of(cfg, o));
  j["group"] = spec.label;
  j["delta_estimate"] = json_delta(est);
  j["horoballs"] = sys.horoballs.size();
  j["shrink_factor"] = sys.shrink_factor;
  j["traces"] = resolved_traces;
  j["max_band"] = band;
  write_text_file(out_path(o, "gmf_summary.json"), j.dump(2) + "\n");
  if (resolved_traces < std::min(o.samples, 20))
    throw InsufficientDataError("gmf-check: too few resolvable traces");
  return 0;
}

int cmd_khinchin(const CommonOpts& o) {
  ParsedConfig cfg = parse_config_file(o.config_path);
  const GroupSpec& spec = need_group(cfg);
  if (!cfg.phi) throw ConfigurationError("khinchin needs a phi spec in the config");
  auto phi = make_phi(*cfg.phi);

  OrbitBall orbit = enumerate_orbit(spec, o.t_max, 4000000);
  DeltaEstimate est = estimate_delta(orbit, o.t_max / 2.0, o.t_max);
  // boundary samples from deep random words (independent of the measure's
  // truncation artifacts)
  std::vector<BoundaryPoint> etas = sample_limit_set(spec, 20000, o.samples, o.seed);

  KhinchinHits hits = simulate_khinchin_hits(spec, 0, phi, etas, o.t_max);
  double k_p = spec.cusps.empty() ? 1.0 : spec.cusps.front().rank;
  double Delta = 2.0 * est.delta - k_p;
  const double lambda = 0.5, L = std::log(2.0);
  auto log_term = [&](double n) {
    double r = std::exp(-n * L);
    double p = phi(r);
    return p > 0.0 ? Delta * std::log(p) : -1e300;
  };
  NumericClassification nc = numeric_series_classification(log_term, 1e5);
  ZeroOneReport rep = khinchin_zero_one_estimate(hits, nc.verdict);

  write_hits_csv(out_path(o, "khinchin_hits.csv"), hits, meta_of(cfg, o));
  Json j = json_meta(meta_of(cfg, o));
  j["group"] = spec.label;
  j["delta_estimate"] = est.delta;
  j["Delta_p"] = Delta;
  j["lambda"] = lambda;
  j["series_exponent_estimate"] = nc.exponent_estimate;
  j["report"] = json_zero_one(rep);
  write_text_file(out_path(o, "khinchin_report.json"), j.dump(2) + "\n");
  return 0;
}

int cmd_dichotomy(const CommonOpts& o) {
  ParsedConfig cfg = parse_config_file(o.config_path);
  const GaugeSpec& g = need_gauge(cfg);
  if (!cfg.model) throw ConfigurationError("dichotomy needs a synthetic model in the config");
  const ExcursionModel& model = *cfg.model;
  int kmin = model.cusps.front().rank, kmax = kmin;
  for (const auto& c : model.cusps) {
    kmin = std::min(kmin, c.rank);
    kmax = std::max(kmax, c.rank);
  }
  Verdict predicted = predict_theorem1(g, kmin, kmax);

  int n_seeds = o.samples;
  std::vector<DriftVerdicts> verdicts(static_cast<size_t>(n_seeds));
  parallel_for(n_seeds, o.threads, [&](int i) {
    verdicts[static_cast<size_t>(i)] = synthetic_drift_verdict(
        model, g, cfg.model_events, o.seed + static_cast<uint64_t>(i));
  });

  int agree = 0;
  std::ostringstream csv;
  csv << "# config_hash=" << hash_hex(cfg.hash) << " seed=" << o.seed << "\n";
  csv << "seed,hausdorff,packing,drift_max,drift_min,agree\n";
  for (int i = 0; i < n_seeds; ++i) {
    const auto& v = verdicts[static_cast<size_t>(i)];
    bool ok = v.hausdorff == predicted.hausdorff && v.packing == predicted.packing;
    agree += ok ? 1 : 0;
    csv << (o.seed + static_cast<uint64_t>(i)) << "," << to_string(v.hausdorff) << ","
        << to_string(v.packing) << "," << fmt17(v.drift_max) << ","
        << fmt17(v.drift_min) << "," << (ok ? 1 : 0) << "\n";
  }
  write_text_file(out_path(o, "dichotomy_seeds.csv"), csv.str());

  Json j = json_meta(meta_of(cfg, o));
  j["events"] = cfg.model_events;
  j["seeds"] = n_seeds;
  j["predicted"] = json_verdict(predicted);
  j["agree"] = agree;
  j["agreement_fraction"] = static_cast<double>(agree) / n_seeds;
  write_text_file(out_path(o, "dichotomy_report.json"), j.dump(2) + "\n");
  if (predicted.hausdorff == MeasureValue::Undecided ||
      predicted.packing == MeasureValue::Undecided)
    return 4;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horolab: Patterson-Sullivan measure dichotomy laboratory"};
  app.require_subcommand(1);

  CommonOpts opts;
  int (*runner)(const CommonOpts&) = nullptr;

  auto wire = [&](CLI::App* cmd, int (*fn)(const CommonOpts&)) {
    add_common(cmd, opts);
    cmd->callback([&runner, fn]() { runner = fn; });
  };
  wire(app.add_subcommand("orbit", "enumerate an orbit ball"), cmd_orbit);
  wire(app.add_subcommand("delta", "estimate the Poincare exponent"), cmd_delta);
  wire(app.add_subcommand("limitset", "sample the limit set"), cmd_limitset);
  wire(app.add_subcommand("gauge-classify", "classify the dichotomy series"),
       cmd_gauge_classify);
  wire(app.add_subcommand("gmf-check", "global measure formula residual scan"),
       cmd_gmf_check);
  wire(app.add_subcommand("khinchin", "shrinking-target hit statistics"), cmd_khinchin);
  wire(app.add_subcommand("dichotomy", "synthetic excursion dichotomy vs predictor"),
       cmd_dichotomy);

  CLI11_PARSE(app, argc, argv);
  try {
    return runner ? runner(opts) : 2;
  } catch (const ConfigParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigurationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientDataError& e) {
    std::cerr << "insufficient data: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
