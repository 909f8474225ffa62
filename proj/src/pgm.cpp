// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>

#include "rdhei/errors.hpp"

namespace rdhei {
namespace {

// Reads one PGM header token: skips whitespace and '#' comment lines, then
// parses an unsigned decimal number.
std::uint64_t read_header_value(std::istream& in, const std::string& path) {
  int c = in.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) {
    throw FormatError(path + ": malformed header");
  }
  std::uint64_t value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > std::numeric_limits<std::uint32_t>::max()) {
      throw FormatError(path + ": header value out of range");
    }
    c = in.get();
  }
  if (c != EOF) in.unget();
  return value;
}

}  // namespace

Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError(path + ": cannot open for reading");
  }
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw FormatError(path + ": not a binary (P5) PGM file");
  }
  const std::uint64_t width = read_header_value(in, path);
  const std::uint64_t height = read_header_value(in, path);
  const std::uint64_t maxval = read_header_value(in, path);
  if (maxval != 255) {
    throw FormatError(path + ": only maxval 255 is supported");
  }
  const int sep = in.get();  // single whitespace byte before the raster
  if (sep == EOF || !std::isspace(sep)) {
    throw FormatError(path + ": malformed header");
  }
  if (width < 2 || height < 2 || width * height > kMaxPixels) {
    throw FormatError(path + ": unsupported dimensions " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  Image image(static_cast<std::size_t>(height), static_cast<std::size_t>(width));
  in.read(reinterpret_cast<char*>(image.pixels.data()),
          static_cast<std::streamsize>(image.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != image.pixels.size()) {
    throw FormatError(path + ": truncated pixel data");
  }
  return image;
}

void write_pgm(const Image& image, const std::string& path) {
  validate(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(path + ": cannot open for writing");
  }
  out << "P5\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) {
    throw Error(path + ": write failed");
  }
}

}  // namespace rdhei
