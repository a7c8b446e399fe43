#pragma once

#include <cstdint>
#include <string>

#include "dwt2d/image.hpp"

namespace dwt2d {

struct EquivResult {
  std::string wavelet;
  int size = 0;
  std::uint64_t seed = 0;
  Extension extension = Extension::periodic;
  int margin = 0;  // component samples ignored at each edge
  int variants = 0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  std::string worst_pair;
  bool ok = false;
};

// max |a - b| over the compared region, normalized by the largest magnitude
// seen in either image (global relative deviation)
double max_relative_deviation(const PolyphaseImage<double>& a,
                              const PolyphaseImage<double>& b, int margin = 0);

// Transforms one seeded random image through every scheme, baseline and
// optimized, and reports the worst pairwise deviation. Symmetric extension
// is compared on the interior only (16 image samples per edge); periodic
// everywhere. Tolerance is 1e-12 when all lifting coefficients are exact
// rationals, 1e-9 otherwise.
EquivResult run_equivalence(const std::string& wavelet, int size,
                            std::uint64_t seed, Extension ext);

std::string format_report(const EquivResult& r);

}  // namespace dwt2d
