#include "dwt2d/subbands.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace dwt2d {

namespace {

template <typename T>
void to_little(const T* src, char* dst, std::size_t count) {
  std::memcpy(dst, src, count * sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t i = 0; i < count; ++i)
      std::reverse(dst + i * sizeof(T), dst + (i + 1) * sizeof(T));
}

template <typename T>
void from_little(const char* src, T* dst, std::size_t count) {
  std::memcpy(dst, src, count * sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t i = 0; i < count; ++i) {
      char* b = reinterpret_cast<char*>(dst + i);
      std::reverse(b, b + sizeof(T));
    }
}

struct SidecarHeader {
  int width = 0, height = 0, precision = 0;
  std::string component;
};

SidecarHeader parse_sidecar(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("subbands: cannot open " + path.string());
  SidecarHeader h;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    bool ok = true;
    if (key == "width")
      ok = static_cast<bool>(ls >> h.width);
    else if (key == "height")
      ok = static_cast<bool>(ls >> h.height);
    else if (key == "precision")
      ok = static_cast<bool>(ls >> h.precision);
    else if (key == "component")
      ok = static_cast<bool>(ls >> h.component);
    else
      ok = false;
    if (!ok)
      throw IoError("subbands: malformed sidecar " + path.string() + " line " +
                    std::to_string(line_no));
  }
  if (h.width <= 0 || h.height <= 0 || h.precision == 0 || h.component.empty())
    throw IoError("subbands: incomplete sidecar " + path.string());
  return h;
}

}  // namespace

template <typename T>
void write_subbands(const PolyphaseImage<T>& p,
                    const std::filesystem::path& dir) {
  if (p.comp_width() <= 0 || p.comp_height() <= 0)
    throw std::invalid_argument("write_subbands: empty components");
  std::filesystem::create_directories(dir);
  for (int i = 0; i < 4; ++i) {
    const auto& c = p.comp[i];
    const std::string label = kComponentLabels[i];
    const auto raw_path = dir / (label + ".raw");
    std::ofstream raw(raw_path, std::ios::binary);
    if (!raw) throw IoError("subbands: cannot create " + raw_path.string());
    std::string buf(c.samples.size() * sizeof(T), '\0');
    to_little(c.samples.data(), buf.data(), c.samples.size());
    raw.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!raw) throw IoError("subbands: write failed: " + raw_path.string());

    const auto hdr_path = dir / (label + ".hdr");
    std::ofstream hdr(hdr_path);
    if (!hdr) throw IoError("subbands: cannot create " + hdr_path.string());
    hdr << "width " << c.width << "\n"
        << "height " << c.height << "\n"
        << "precision " << sizeof(T) * 8 << "\n"
        << "component " << label << "\n";
    if (!hdr) throw IoError("subbands: write failed: " + hdr_path.string());
  }
}

template <typename T>
PolyphaseImage<T> read_subbands(const std::filesystem::path& dir,
                                Extension ext) {
  PolyphaseImage<T> p;
  p.extension = ext;
  for (int i = 0; i < 4; ++i) {
    const std::string label = kComponentLabels[i];
    SidecarHeader h = parse_sidecar(dir / (label + ".hdr"));
    if (h.component != label)
      throw IoError("subbands: component label mismatch in " + label + ".hdr");
    if (h.precision != static_cast<int>(sizeof(T) * 8))
      throw IoError("subbands: precision mismatch in " + label + ".hdr (have " +
                    std::to_string(h.precision) + ", want " +
                    std::to_string(sizeof(T) * 8) + ")");
    const auto raw_path = dir / (label + ".raw");
    std::ifstream raw(raw_path, std::ios::binary);
    if (!raw) throw IoError("subbands: cannot open " + raw_path.string());
    raw.seekg(0, std::ios::end);
    const auto size = static_cast<std::size_t>(raw.tellg());
    raw.seekg(0);
    const std::size_t expect =
        static_cast<std::size_t>(h.width) * h.height * sizeof(T);
    if (size != expect)
      throw IoError("subbands: " + raw_path.string() + " holds " +
                    std::to_string(size) + " bytes, header promises " +
                    std::to_string(expect));
    std::string buf(expect, '\0');
    raw.read(buf.data(), static_cast<std::streamsize>(expect));
    if (static_cast<std::size_t>(raw.gcount()) != expect)
      throw IoError("subbands: short read: " + raw_path.string());
    ImagePlane<T> plane(h.width, h.height);
    from_little(buf.data(), plane.samples.data(), plane.samples.size());
    p.comp[i] = std::move(plane);
  }
  const int w2 = p.comp_width(), h2 = p.comp_height();
  for (const auto& c : p.comp)
    if (c.width != w2 || c.height != h2)
      throw IoError("subbands: component sizes disagree across sidecars");
  return p;
}

template void write_subbands<float>(const PolyphaseImage<float>&,
                                    const std::filesystem::path&);
template void write_subbands<double>(const PolyphaseImage<double>&,
                                     const std::filesystem::path&);
template PolyphaseImage<float> read_subbands<float>(
    const std::filesystem::path&, Extension);
template PolyphaseImage<double> read_subbands<double>(
    const std::filesystem::path&, Extension);

}  // namespace dwt2d
