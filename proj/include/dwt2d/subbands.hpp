#pragma once

#include <filesystem>

#include "dwt2d/image.hpp"
#include "dwt2d/io_error.hpp"

namespace dwt2d {

// Writes the four components as raw little-endian IEEE floating point,
// row-major, one <label>.raw per component plus a <label>.hdr text sidecar
// carrying width, height, precision and the component label. The directory
// is created when missing.
template <typename T>
void write_subbands(const PolyphaseImage<T>& p,
                    const std::filesystem::path& dir);

// Reads four components written by write_subbands; validates every sidecar
// against the raw payload and the requested precision.
template <typename T>
PolyphaseImage<T> read_subbands(const std::filesystem::path& dir,
                                Extension ext = Extension::periodic);

}  // namespace dwt2d
