#include "horolab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace horolab {

uint64_t fnv1a(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_doubles(const std::string& s, int line) {
  std::istringstream is(s);
  std::vector<double> out;
  double v;
  while (is >> v) out.push_back(v);
  std::string rest;
  is.clear();
  if (is >> rest) throw ConfigParseError(line, "trailing non-numeric data: " + rest);
  if (out.empty()) throw ConfigParseError(line, "expected numeric values");
  return out;
}

struct RawCusp {
  std::vector<double> point;
  int rank = 1;
  double base_radius = 0.5;
  std::vector<std::vector<double>> stabilizers;
  int line = 0;
};

struct RawCuspModel {
  int rank = 1;
  double intensity = 1.0;
  int line = 0;
};

Isometry build_isometry(int dim, const std::vector<double>& vals, int line) {
  Mat2c m;
  if (dim == 2) {
    if (vals.size() != 4)
      throw ConfigParseError(line, "d=2 matrix needs 4 entries (row-major)");
    m = {Cx(vals[0]), Cx(vals[1]), Cx(vals[2]), Cx(vals[3])};
  } else {
    if (vals.size() != 8)
      throw ConfigParseError(line, "d=3 matrix needs 8 entries (re im pairs, row-major)");
    m = {Cx(vals[0], vals[1]), Cx(vals[2], vals[3]), Cx(vals[4], vals[5]),
         Cx(vals[6], vals[7])};
  }
  try {
    return Isometry::from_halfspace_normalized(dim, m);
  } catch (const std::exception& e) {
    throw ConfigParseError(line, std::string("bad matrix: ") + e.what());
  }
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
  ParsedConfig cfg;
  cfg.raw_text = text;
  cfg.hash = fnv1a(text);

  std::string label;
  int dimension = 2;
  bool have_dimension = false;
  std::vector<std::pair<std::vector<double>, int>> generators;
  std::vector<RawCusp> cusps;
  std::vector<RawCuspModel> cusp_models;
  bool have_group_keys = false;

  GaugeSpec gauge;
  bool have_gauge = false;

  double model_delta = 0.0, model_lambda = 0.5;
  bool have_model = false;

  RawCusp* open_cusp = nullptr;
  RawCuspModel* open_model = nullptr;

  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string s = raw;
    size_t hashpos = s.find('#');
    if (hashpos != std::string::npos) s = s.substr(0, hashpos);
    s = trim(s);
    if (s.empty()) continue;

    if (s == "begin cusp") {
      if (open_cusp || open_model) throw ConfigParseError(line, "nested block");
      cusps.emplace_back();
      cusps.back().line = line;
      open_cusp = &cusps.back();
      have_group_keys = true;
      continue;
    }
    if (s == "end cusp") {
      if (!open_cusp) throw ConfigParseError(line, "end cusp without begin");
      open_cusp = nullptr;
      continue;
    }
    if (s == "begin cusp_model") {
      if (open_cusp || open_model) throw ConfigParseError(line, "nested block");
      cusp_models.emplace_back();
      cusp_models.back().line = line;
      open_model = &cusp_models.back();
      have_model = true;
      continue;
    }
    if (s == "end cusp_model") {
      if (!open_model) throw ConfigParseError(line, "end cusp_model without begin");
      open_model = nullptr;
      continue;
    }

    size_t eq = s.find('=');
    if (eq == std::string::npos) throw ConfigParseError(line, "expected key = value");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (value.empty()) throw ConfigParseError(line, "empty value for key " + key);

    if (open_cusp) {
      if (key == "point")
        open_cusp->point = parse_doubles(value, line);
      else if (key == "rank")
        open_cusp->rank = static_cast<int>(parse_doubles(value, line)[0]);
      else if (key == "base_radius")
        open_cusp->base_radius = parse_doubles(value, line)[0];
      else if (key == "stabilizer")
        open_cusp->stabilizers.push_back(parse_doubles(value, line));
      else
        throw ConfigParseError(line, "unknown cusp key: " + key);
      continue;
    }
    if (open_model) {
      if (key == "rank")
        open_model->rank = static_cast<int>(parse_doubles(value, line)[0]);
      else if (key == "intensity")
        open_model->intensity = parse_doubles(value, line)[0];
      else
        throw ConfigParseError(line, "unknown cusp_model key: " + key);
      continue;
    }

    if (key == "label") {
      label = value;
      have_group_keys = true;
    } else if (key == "dimension") {
      dimension = static_cast<int>(parse_doubles(value, line)[0]);
      have_dimension = true;
      have_group_keys = true;
      if (dimension != 2 && dimension != 3)
        throw ConfigParseError(line, "dimension must be 2 or 3");
    } else if (key == "generator") {
      generators.emplace_back(parse_doubles(value, line), line);
      have_group_keys = true;
    } else if (key == "delta") {
      gauge.delta = parse_doubles(value, line)[0];
      have_gauge = true;
    } else if (key == "c_lin") {
      gauge.c[0] = parse_doubles(value, line)[0];
    } else if (key == "c_log") {
      gauge.c[1] = parse_doubles(value, line)[0];
    } else if (key == "c_loglog") {
      gauge.c[2] = parse_doubles(value, line)[0];
    } else if (key == "c_logloglog") {
      gauge.c[3] = parse_doubles(value, line)[0];
    } else if (key == "c_log4") {
      gauge.c[4] = parse_doubles(value, line)[0];
    } else if (key == "c_const") {
      gauge.c[5] = parse_doubles(value, line)[0];
    } else if (key == "kmin") {
      cfg.kmin = parse_doubles(value, line)[0];
    } else if (key == "kmax") {
      cfg.kmax = parse_doubles(value, line)[0];
    } else if (key == "phi") {
      std::istringstream ps(value);
      PhiSpec phi;
      ps >> phi.kind;
      double v;
      while (ps >> v) phi.params.push_back(v);
      if (phi.kind != "const" && phi.kind != "logpow")
        throw ConfigParseError(line, "phi kind must be const or logpow");
      if (phi.kind == "const" && phi.params.size() != 1)
        throw ConfigParseError(line, "phi = const <c>");
      if (phi.kind == "logpow" && phi.params.size() != 2)
        throw ConfigParseError(line, "phi = logpow <q> <c>");
      cfg.phi = phi;
    } else if (key == "model_delta") {
      model_delta = parse_doubles(value, line)[0];
      have_model = true;
    } else if (key == "model_lambda") {
      model_lambda = parse_doubles(value, line)[0];
      have_model = true;
    } else if (key == "model_events") {
      cfg.model_events = static_cast<int64_t>(parse_doubles(value, line)[0]);
    } else {
      throw ConfigParseError(line, "unknown key: " + key);
    }
  }
  if (open_cusp) throw ConfigParseError(line, "unterminated cusp block");
  if (open_model) throw ConfigParseError(line, "unterminated cusp_model block");

  if (have_group_keys && !generators.empty()) {
    GroupSpec g;
    g.label = label;
    g.dim = have_dimension ? dimension : 2;
    for (const auto& [vals, ln] : generators)
      g.generators.push_back(build_isometry(g.dim, vals, ln));
    for (const auto& rc : cusps) {
      CuspDatum c;
      if (static_cast<int>(rc.point.size()) != g.dim)
        throw ConfigParseError(rc.line, "cusp point needs dimension-many coordinates");
      Vec v;
      v.dim = g.dim;
      for (int i = 0; i < g.dim; ++i) v[i] = rc.point[static_cast<size_t>(i)];
      double n = norm(v);
      if (std::fabs(n - 1.0) > 1e-6)
        throw ConfigParseError(rc.line, "cusp point must be a unit vector");
      c.point = BoundaryPoint::make(v * (1.0 / n));
      c.rank = rc.rank;
      c.base_radius = rc.base_radius;
      for (const auto& sv : rc.stabilizers)
        c.stabilizer_generators.push_back(build_isometry(g.dim, sv, rc.line));
      g.cusps.push_back(std::move(c));
    }
    try {
      g.validate();
    } catch (const std::exception& e) {
      throw ConfigParseError(line, std::string("group validation: ") + e.what());
    }
    cfg.group = std::move(g);
  }

  if (have_gauge) cfg.gauge = gauge;

  if (have_model) {
    ExcursionModel m;
    m.delta = model_delta;
    m.lambda = model_lambda;
    m.dim = 3;
    for (const auto& rc : cusp_models)
      m.cusps.push_back(CuspModel{rc.rank, rc.intensity});
    if (!m.cusps.empty()) {
      try {
        m.validate();
      } catch (const std::exception& e) {
        throw ConfigParseError(line, std::string("model validation: ") + e.what());
      }
      cfg.model = std::move(m);
    }
  }
  return cfg;
}

ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigurationError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::function<double(double)> make_phi(const PhiSpec& spec) {
  if (spec.kind == "const") {
    double c = spec.params[0];
    return [c](double) { return c; };
  }
  double q = spec.params[0], c = spec.params[1];
  return [q, c](double r) {
    if (!(r > 0.0 && r < 1.0)) return 0.0;
    return c * std::pow(-std::log(r), -q);
  };
}

}  // namespace horolab
