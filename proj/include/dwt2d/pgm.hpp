#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>

#include "dwt2d/image.hpp"

namespace dwt2d {

struct PgmError : std::runtime_error {
  enum class Kind { unsupported_magic, bad_header, truncated };
  PgmError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// Reads binary (P5) or ASCII (P2) PGM with maxval up to 65535; two-byte
// samples are big-endian per the format. Samples come back normalized to
// [0, 1].
ImagePlane<double> read_pgm(std::istream& in);
ImagePlane<double> read_pgm(const std::filesystem::path& path);

}  // namespace dwt2d
