#pragma once

#include <cstdint>
#include <vector>

namespace horolab {

// Log-density samples along a geodesic: value(t) ~ log(mu(B(eta,e^{-t})) / psi(e^{-t})).
// Entries can be flagged unresolved (empty ball or below atom resolution).
struct DensityTrace {
  enum class Source { Empirical, Synthetic };

  std::vector<double> t;        // strictly increasing
  std::vector<double> value;    // finite where resolved
  std::vector<uint8_t> resolved;
  Source source = Source::Empirical;

  size_t size() const { return t.size(); }
  void push(double tt, double v, bool ok) {
    t.push_back(tt);
    value.push_back(v);
    resolved.push_back(ok ? 1 : 0);
  }
};

}  // namespace horolab
