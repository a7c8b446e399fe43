#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dwt2d/laurent.hpp"

namespace dwt2d {

// One predict/update pair of lifting polynomials. Both are univariate with
// keys on the horizontal axis; the vertical forms are derived by transpose.
struct LiftingPair {
  LaurentPoly predict;
  LaurentPoly update;
};

class WaveletSpec {
 public:
  WaveletSpec() = default;
  WaveletSpec(std::string name, std::vector<LiftingPair> pairs,
              double scaling = 1.0);

  const std::string& name() const { return name_; }
  const std::vector<LiftingPair>& pairs() const { return pairs_; }
  // low-pass gain factor applied after the lifting steps (1 when absent)
  double scaling() const { return scaling_; }

 private:
  std::string name_;
  std::vector<LiftingPair> pairs_;
  double scaling_ = 1.0;
};

// built-in wavelets: cdf53, cdf97, dd137
const WaveletSpec& get_wavelet(std::string_view name);
std::vector<std::string> wavelet_names();

// plain-text wavelet definition, one lifting polynomial per line; see README
WaveletSpec parse_wavelet_definition(std::istream& in, std::string name);
WaveletSpec load_wavelet_file(const std::filesystem::path& path);

// resolves a CLI-facing name: a built-in, or a path to a definition file
WaveletSpec resolve_wavelet(const std::string& name_or_path);

}  // namespace dwt2d
