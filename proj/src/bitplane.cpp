// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/bitplane.hpp"

#include <stdexcept>
#include <string>

#include "rdhei/errors.hpp"

namespace rdhei {
namespace bitplane {

PlaneStack decompose(const Image& image) {
  validate(image);
  const std::size_t mn = image.height * image.width;
  PlaneStack stack{image.height, image.width, BitStream(8 * mn)};
  for (unsigned k = 8; k >= 1; --k) {
    const std::size_t base = (8 - k) * mn;
    const unsigned shift = k - 1;
    for (std::size_t p = 0; p < mn; ++p) {
      if ((image.pixels[p] >> shift) & 1) stack.bits.set(base + p, true);
    }
  }
  return stack;
}

Image recompose(const PlaneStack& stack) {
  const std::size_t mn = stack.height * stack.width;
  if (stack.bits.size() != 8 * mn) {
    throw std::invalid_argument("plane stack must hold exactly 8*m*n bits");
  }
  Image image(stack.height, stack.width);
  validate(image);
  for (unsigned k = 8; k >= 1; --k) {
    const std::size_t base = (8 - k) * mn;
    const std::uint8_t weight = static_cast<std::uint8_t>(1u << (k - 1));
    for (std::size_t p = 0; p < mn; ++p) {
      if (stack.bits.get(base + p)) image.pixels[p] |= weight;
    }
  }
  return image;
}

BitStream plane_slice(const PlaneStack& stack, unsigned plane) {
  if (plane < 1 || plane > 8) {
    throw std::invalid_argument("plane index must be in 1..8, got " +
                                std::to_string(plane));
  }
  const std::size_t mn = stack.height * stack.width;
  if (stack.bits.size() != 8 * mn) {
    throw std::invalid_argument("plane stack must hold exactly 8*m*n bits");
  }
  return stack.bits.slice((8 - plane) * mn, mn);
}

}  // namespace bitplane
}  // namespace rdhei
