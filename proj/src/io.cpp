#include "horolab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace horolab {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string hash_hex(uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json json_meta(const OutputMeta& meta) {
  Json j;
  j["config_hash"] = hash_hex(meta.config_hash);
  j["seed"] = meta.seed;
  return j;
}

Json json_series_decision(const SeriesDecision& d) {
  Json j;
  j["verdict"] = to_string(d.verdict);
  j["consequence"] = to_string(d.consequence);
  j["multiplier"] = d.multiplier;
  j["exponents"] = d.exponents;
  j["decided_level"] = d.decided_level;
  j["reduced_summand"] = d.reduced_summand;
  j["steps"] = d.steps;
  return j;
}

Json json_verdict(const Verdict& v) {
  Json j;
  j["hausdorff"] = to_string(v.hausdorff);
  j["packing"] = to_string(v.packing);
  j["hausdorff_trace"] = json_series_decision(v.hausdorff_trace);
  j["packing_trace"] = json_series_decision(v.packing_trace);
  j["mu_proportional_hausdorff_delta"] = v.mu_proportional_hausdorff_delta;
  j["mu_proportional_packing_delta"] = v.mu_proportional_packing_delta;
  j["bounded_psi_note"] = v.bounded_psi_note;
  return j;
}

Json json_delta(const DeltaEstimate& d) {
  Json j;
  j["delta"] = d.delta;
  j["stderr"] = d.stderr_slope;
  j["residual_rms"] = d.residual_rms;
  j["window"] = {d.window_lo, d.window_hi};
  j["samples"] = d.samples;
  return j;
}

Json json_rtt(const RttResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["drift_low"] = r.drift_low;
  j["drift_high"] = r.drift_high;
  j["band"] = r.band;
  j["usable_traces"] = r.usable_traces;
  j["windows"] = r.windows;
  return j;
}

Json json_zero_one(const ZeroOneReport& r) {
  Json j;
  j["thresholds"] = r.thresholds;
  j["tail_fraction"] = r.tail_fraction;
  j["series_verdict"] = to_string(r.series_verdict);
  j["consistent"] = r.consistent;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigurationError("cannot open output file: " + path);
  f << content;
}

namespace {

std::string meta_line(const OutputMeta& meta) {
  return "# config_hash=" + hash_hex(meta.config_hash) +
         " seed=" + std::to_string(meta.seed) + "\n";
}

}  // namespace

void write_orbit_csv(const std::string& path, const OrbitBall& orbit,
                     const OutputMeta& meta) {
  std::ostringstream os;
  os << meta_line(meta);
  os << (orbit.dim == 2 ? "x,y,distance,word_length\n" : "x,y,z,distance,word_length\n");
  for (const auto& e : orbit.entries) {
    os << fmt17(e.point[0]) << "," << fmt17(e.point[1]);
    if (orbit.dim == 3) os << "," << fmt17(e.point[2]);
    os << "," << fmt17(e.distance) << "," << e.word_length << "\n";
  }
  write_text_file(path, os.str());
}

void write_limitset_csv(const std::string& path,
                        const std::vector<BoundaryPoint>& pts, const OutputMeta& meta) {
  std::ostringstream os;
  os << meta_line(meta);
  if (pts.empty() || pts.front().dim() == 2)
    os << "x,y\n";
  else
    os << "x,y,z\n";
  for (const auto& p : pts) {
    os << fmt17(p.u[0]) << "," << fmt17(p.u[1]);
    if (p.dim() == 3) os << "," << fmt17(p.u[2]);
    os << "\n";
  }
  write_text_file(path, os.str());
}

void write_measure_csv(const std::string& path, const AtomicMeasure& mu,
                       const OutputMeta& meta) {
  std::ostringstream os;
  os << meta_line(meta);
  os << "# group=" << mu.provenance().group_label
     << " s=" << fmt17(mu.provenance().s)
     << " truncation=" << fmt17(mu.provenance().truncation) << "\n";
  os << (mu.dim() == 2 ? "x,y,weight\n" : "x,y,z,weight\n");
  for (const auto& a : mu.atoms()) {
    os << fmt17(a.xi.u[0]) << "," << fmt17(a.xi.u[1]);
    if (mu.dim() == 3) os << "," << fmt17(a.xi.u[2]);
    os << "," << fmt17(a.weight) << "\n";
  }
  write_text_file(path, os.str());
}

AtomicMeasure load_measure_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigurationError("cannot open measure csv: " + path);
  std::string line;
  std::vector<Atom> atoms;
  int dim = 2;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("x,y", 0) == 0) {
      dim = line.rfind("x,y,z", 0) == 0 ? 3 : 2;
      continue;
    }
    std::istringstream ls(line);
    std::vector<double> vals;
    std::string cell;
    while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
    if (static_cast<int>(vals.size()) != dim + 1)
      throw ConfigurationError("measure csv: bad row arity");
    Vec v;
    v.dim = dim;
    for (int i = 0; i < dim; ++i) v[i] = vals[static_cast<size_t>(i)];
    if (std::fabs(norm(v) - 1.0) > 1e-6)
      throw ConfigurationError("measure csv: atom direction not unit length");
    // adopt the stored coordinates verbatim so the decimal round trip is
    // bit exact
    BoundaryPoint b;
    b.u = v;
    atoms.push_back(Atom{b, vals.back()});
  }
  return AtomicMeasure::from_atoms(std::move(atoms), {});
}

void write_traces_csv(const std::string& path, const std::vector<DensityTrace>& traces,
                      const OutputMeta& meta) {
  std::ostringstream os;
  os << meta_line(meta);
  os << "trace,t,value,resolved\n";
  for (size_t i = 0; i < traces.size(); ++i) {
    const auto& tr = traces[i];
    for (size_t k = 0; k < tr.size(); ++k) {
      os << i << "," << fmt17(tr.t[k]) << ","
         << (tr.resolved[k] ? fmt17(tr.value[k]) : std::string("nan")) << ","
         << static_cast<int>(tr.resolved[k]) << "\n";
    }
  }
  write_text_file(path, os.str());
}

void write_hits_csv(const std::string& path, const KhinchinHits& hits,
                    const OutputMeta& meta) {
  std::ostringstream os;
  os << meta_line(meta);
  os << "eta,hit_scale\n";
  for (size_t e = 0; e < hits.hit_scales.size(); ++e)
    for (double s : hits.hit_scales[e]) os << e << "," << fmt17(s) << "\n";
  write_text_file(path, os.str());
}

}  // namespace horolab
