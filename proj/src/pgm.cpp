#include "dwt2d/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <string>

#include "dwt2d/io_error.hpp"

namespace dwt2d {

namespace {

// skips whitespace and '#' comments between header tokens
bool next_header_token(std::istream& in, std::string& tok) {
  tok.clear();
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) break;
  }
  if (c == EOF) return false;
  do {
    tok.push_back(static_cast<char>(c));
  } while ((c = in.get()) != EOF && !std::isspace(c) && c != '#');
  // leave the terminator in the stream; the raster separator after the
  // maxval token must stay readable
  if (c != EOF) in.unget();
  return true;
}

long parse_header_int(std::istream& in, const char* what) {
  std::string tok;
  if (!next_header_token(in, tok))
    throw PgmError(PgmError::Kind::bad_header,
                   std::string("pgm: missing ") + what);
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw PgmError(PgmError::Kind::bad_header,
                     std::string("pgm: malformed ") + what + ": " + tok);
  if (tok.size() > 9)
    throw PgmError(PgmError::Kind::bad_header,
                   std::string("pgm: out-of-range ") + what + ": " + tok);
  return std::stol(tok);
}

}  // namespace

ImagePlane<double> read_pgm(std::istream& in) {
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (!in || m0 != 'P' || (m1 != '2' && m1 != '5'))
    throw PgmError(PgmError::Kind::unsupported_magic,
                   "pgm: unsupported magic (want P2 or P5)");
  const bool binary = (m1 == '5');

  const long width = parse_header_int(in, "width");
  const long height = parse_header_int(in, "height");
  const long maxval = parse_header_int(in, "maxval");
  if (width <= 0 || height <= 0)
    throw PgmError(PgmError::Kind::bad_header, "pgm: non-positive dimensions");
  if (maxval < 1 || maxval > 65535)
    throw PgmError(PgmError::Kind::bad_header,
                   "pgm: maxval out of range [1, 65535]");

  ImagePlane<double> img(static_cast<int>(width), static_cast<int>(height));
  const double scale = 1.0 / static_cast<double>(maxval);
  const std::size_t count = img.samples.size();

  if (binary) {
    // exactly one whitespace byte separates the header from the raster
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
      throw PgmError(PgmError::Kind::bad_header,
                     "pgm: missing raster separator");
    const int bytes = maxval > 255 ? 2 : 1;
    std::string raw(count * bytes, '\0');
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
      throw PgmError(PgmError::Kind::truncated, "pgm: truncated raster data");
    const auto* bp = reinterpret_cast<const unsigned char*>(raw.data());
    for (std::size_t i = 0; i < count; ++i) {
      unsigned v = bytes == 2 ? (unsigned(bp[2 * i]) << 8) | bp[2 * i + 1]
                              : bp[i];
      if (v > static_cast<unsigned>(maxval))
        throw PgmError(PgmError::Kind::truncated,
                       "pgm: sample exceeds maxval");
      img.samples[i] = v * scale;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      long v = 0;
      if (!(in >> v))
        throw PgmError(PgmError::Kind::truncated, "pgm: truncated sample list");
      if (v < 0 || v > maxval)
        throw PgmError(PgmError::Kind::truncated,
                       "pgm: sample exceeds maxval");
      img.samples[i] = v * scale;
    }
  }
  return img;
}

ImagePlane<double> read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("pgm: cannot open " + path.string());
  return read_pgm(in);
}

}  // namespace dwt2d
