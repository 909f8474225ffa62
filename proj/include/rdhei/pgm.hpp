// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_PGM_HPP_
#define RDHEI_PGM_HPP_

#include <string>

#include "rdhei/image.hpp"

namespace rdhei {

// Reads a binary (P5) PGM file with maxval 255. Containers and encrypted
// containers round-trip through this format unchanged, since they are
// ordinary 8-bit grayscale images. Throws FormatError on malformed input.
Image read_pgm(const std::string& path);

// Writes a binary (P5) PGM file with maxval 255.
void write_pgm(const Image& image, const std::string& path);

}  // namespace rdhei

#endif  // RDHEI_PGM_HPP_
