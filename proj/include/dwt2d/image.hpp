#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dwt2d {

enum class Extension { periodic, symmetric };

// Maps an out-of-range index onto [0, n). Symmetric mode reflects on the
// samples themselves (whole-sample symmetry, period 2n-2).
inline int extend_index(int i, int n, Extension mode) {
  if (n <= 0) throw std::invalid_argument("extend_index: empty axis");
  if (i >= 0 && i < n) return i;
  if (mode == Extension::periodic) {
    int r = i % n;
    return r < 0 ? r + n : r;
  }
  if (n == 1) return 0;
  const int period = 2 * n - 2;
  int r = i % period;
  if (r < 0) r += period;
  return r < n ? r : period - r;
}

template <typename T>
struct ImagePlane {
  int width = 0;
  int height = 0;
  std::vector<T> samples;

  ImagePlane() = default;
  ImagePlane(int w, int h) : width(w), height(h) {
    if (w < 0 || h < 0) throw std::invalid_argument("negative plane size");
    samples.assign(static_cast<std::size_t>(w) * h, T{});
  }

  T& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
  const T& at(int x, int y) const {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  T* row(int y) { return samples.data() + static_cast<std::size_t>(y) * width; }
  const T* row(int y) const {
    return samples.data() + static_cast<std::size_t>(y) * width;
  }

  friend bool operator==(const ImagePlane& a, const ImagePlane& b) {
    return a.width == b.width && a.height == b.height && a.samples == b.samples;
  }
};

// Polyphase decomposition of an even-sized plane. Components are ordered by
// (column parity, row parity): ee, oe, eo, oo. Component oe holds the
// odd-column/even-row samples, and so on.
inline constexpr std::array<const char*, 4> kComponentLabels = {"ee", "oe",
                                                                "eo", "oo"};

template <typename T>
struct PolyphaseImage {
  std::array<ImagePlane<T>, 4> comp;
  Extension extension = Extension::periodic;

  int comp_width() const { return comp[0].width; }
  int comp_height() const { return comp[0].height; }

  friend bool operator==(const PolyphaseImage& a, const PolyphaseImage& b) {
    return a.comp == b.comp && a.extension == b.extension;
  }
};

template <typename T>
PolyphaseImage<T> polyphase_split(const ImagePlane<T>& img,
                                  Extension ext = Extension::periodic) {
  if (img.width <= 0 || img.height <= 0)
    throw std::invalid_argument("polyphase_split: empty image");
  if (img.width % 2 != 0)
    throw std::invalid_argument("polyphase_split: odd image width");
  if (img.height % 2 != 0)
    throw std::invalid_argument("polyphase_split: odd image height");
  PolyphaseImage<T> out;
  out.extension = ext;
  const int w2 = img.width / 2, h2 = img.height / 2;
  for (auto& c : out.comp) c = ImagePlane<T>(w2, h2);
  for (int y = 0; y < h2; ++y)
    for (int x = 0; x < w2; ++x) {
      out.comp[0].at(x, y) = img.at(2 * x, 2 * y);
      out.comp[1].at(x, y) = img.at(2 * x + 1, 2 * y);
      out.comp[2].at(x, y) = img.at(2 * x, 2 * y + 1);
      out.comp[3].at(x, y) = img.at(2 * x + 1, 2 * y + 1);
    }
  return out;
}

template <typename T>
ImagePlane<T> polyphase_merge(const PolyphaseImage<T>& p) {
  const int w2 = p.comp_width(), h2 = p.comp_height();
  for (const auto& c : p.comp)
    if (c.width != w2 || c.height != h2)
      throw std::invalid_argument("polyphase_merge: component size mismatch");
  if (w2 <= 0 || h2 <= 0)
    throw std::invalid_argument("polyphase_merge: empty components");
  ImagePlane<T> img(2 * w2, 2 * h2);
  for (int y = 0; y < h2; ++y)
    for (int x = 0; x < w2; ++x) {
      img.at(2 * x, 2 * y) = p.comp[0].at(x, y);
      img.at(2 * x + 1, 2 * y) = p.comp[1].at(x, y);
      img.at(2 * x, 2 * y + 1) = p.comp[2].at(x, y);
      img.at(2 * x + 1, 2 * y + 1) = p.comp[3].at(x, y);
    }
  return img;
}

}  // namespace dwt2d
