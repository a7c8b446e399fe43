#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "dwt2d/image.hpp"
#include "dwt2d/scheme.hpp"

namespace dwt2d {

struct BenchRecord {
  std::string scheme;  // scheme id, "-optimized" suffix for optimized runs
  std::string wavelet;
  int width = 0;
  int height = 0;
  double megapixels = 0.0;
  int precision_bits = 0;
  int workers = 0;
  double seconds = 0.0;  // median over repeats
  double throughput_gbps = 0.0;
};

struct BenchConfig {
  std::string wavelet = "cdf53";
  std::vector<SchemeKind> kinds = all_scheme_kinds();
  bool optimize = false;
  std::vector<int> sizes = {256, 512, 1024, 2048, 4096};
  int workers = 1;
  int repeats = 3;
  int precision_bits = 32;
  std::uint64_t seed = 1;
  Extension extension = Extension::periodic;
  // injectable time source (seconds); defaults to the steady clock
  std::function<double()> clock;
};

// One warmup plus `repeats` timed transforms per (scheme, size), reported as
// the median. Throughput counts one read and one write of the whole image:
// 2 * width * height * bytes_per_sample / seconds / 1e9.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

extern const char* const kCsvHeader;
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace dwt2d
