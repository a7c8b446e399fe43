#pragma once

#include <cstdint>

#include "dwt2d/image.hpp"

namespace dwt2d {

// Fixed 64-bit linear congruential generator (Knuth's MMIX multiplier), so
// fixtures reproduce exactly across platforms and languages:
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// Each draw advances the state once and maps the top 53 bits onto [0, 1).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_;
  }

  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Row-major fill with samples in [0, 1).
template <typename T>
ImagePlane<T> random_image(int width, int height, std::uint64_t seed) {
  ImagePlane<T> img(width, height);
  Lcg64 rng(seed);
  for (auto& s : img.samples) s = static_cast<T>(rng.next_unit());
  return img;
}

}  // namespace dwt2d
