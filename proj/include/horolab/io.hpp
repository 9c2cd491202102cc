// CSV/JSON emission. Every output embeds the config hash and seed, doubles
// are printed with 17 significant digits so that decimal round-trips are
// bit-exact, and field order is fixed for byte-identical replay.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "horolab/density.hpp"
#include "horolab/group.hpp"
#include "horolab/khinchin.hpp"
#include "horolab/measure.hpp"
#include "horolab/predictor.hpp"
#include "horolab/series.hpp"
#include "horolab/trace.hpp"

namespace horolab {

using Json = nlohmann::ordered_json;

std::string fmt17(double v);
std::string hash_hex(uint64_t h);

struct OutputMeta {
  uint64_t config_hash = 0;
  uint64_t seed = 0;
};

Json json_meta(const OutputMeta& meta);
Json json_series_decision(const SeriesDecision& d);
Json json_verdict(const Verdict& v);
Json json_delta(const DeltaEstimate& d);
Json json_rtt(const RttResult& r);
Json json_zero_one(const ZeroOneReport& r);

void write_text_file(const std::string& path, const std::string& content);

void write_orbit_csv(const std::string& path, const OrbitBall& orbit,
                     const OutputMeta& meta);
void write_limitset_csv(const std::string& path,
                        const std::vector<BoundaryPoint>& pts, const OutputMeta& meta);
void write_measure_csv(const std::string& path, const AtomicMeasure& mu,
                       const OutputMeta& meta);
AtomicMeasure load_measure_csv(const std::string& path);
void write_traces_csv(const std::string& path, const std::vector<DensityTrace>& traces,
                      const OutputMeta& meta);
void write_hits_csv(const std::string& path, const KhinchinHits& hits,
                    const OutputMeta& meta);

}  // namespace horolab
