#pragma once

// Deterministic float formatting for all JSON the library emits: numbers are
// rounded to 12 significant digits before serialization, so reports are
// byte-identical across runs and diffable as golden files.

#include <complex>
#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace qss::detail {

inline double round12(double x) {
  if (x == 0.0) return 0.0;  // also normalizes -0.0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline nlohmann::ordered_json complex_pair(std::complex<double> z) {
  return nlohmann::ordered_json::array({round12(z.real()), round12(z.imag())});
}

}  // namespace qss::detail
