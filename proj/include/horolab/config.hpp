// Flat declarative text config. Lines are `key = value...` with `#`
// comments; cusp and cusp_model blocks are delimited by begin/end lines.
// Matrices are row-major decimal in half-space coordinates: 4 reals for
// d=2, 8 reals (re/im pairs) for d=3. Decimal values round-trip at 17
// significant digits.
//
//   label = modular
//   dimension = 2
//   generator = 1 1 0 1
//   begin cusp
//   point = 0 -1
//   rank = 1
//   base_radius = 0.5
//   stabilizer = 1 1 0 1
//   end cusp
//
//   delta = 1.5
//   kmin = 1
//   kmax = 2
//   c_log = 0.5
//   c_logloglog = 0.5
//
//   phi = const 1.0            (or: phi = logpow <q> <c>  for c*log(1/r)^-q)
//
//   model_delta = 1.5
//   model_lambda = 0.5
//   model_events = 1000000
//   begin cusp_model
//   rank = 2
//   intensity = 1.0
//   end cusp_model

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "horolab/errors.hpp"
#include "horolab/excursion.hpp"
#include "horolab/gauge.hpp"
#include "horolab/group.hpp"

namespace horolab {

struct PhiSpec {
  std::string kind;  // "const" | "logpow"
  std::vector<double> params;
};

struct ParsedConfig {
  std::optional<GroupSpec> group;
  std::optional<GaugeSpec> gauge;
  std::optional<double> kmin, kmax;
  std::optional<ExcursionModel> model;
  int64_t model_events = 1000000;
  std::optional<PhiSpec> phi;
  std::string raw_text;
  uint64_t hash = 0;
};

uint64_t fnv1a(const std::string& text);

ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

// Khinchin function from the phi spec:
//   const c:     phi(r) = c
//   logpow q c:  phi(r) = c * log(1/r)^{-q}
std::function<double(double)> make_phi(const PhiSpec& spec);

}  // namespace horolab
