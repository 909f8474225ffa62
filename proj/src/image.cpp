// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/image.hpp"

#include <stdexcept>
#include <string>

namespace rdhei {

void validate(const Image& image) {
  if (image.height < 2 || image.width < 2) {
    throw std::invalid_argument("image must be at least 2x2, got " +
                                std::to_string(image.height) + "x" +
                                std::to_string(image.width));
  }
  if (image.height * image.width > kMaxPixels) {
    throw std::invalid_argument("image exceeds the supported pixel count");
  }
  if (image.pixels.size() != image.height * image.width) {
    throw std::invalid_argument("pixel buffer size does not match dimensions");
  }
}

}  // namespace rdhei
