// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_BITPLANE_HPP_
#define RDHEI_BITPLANE_HPP_

#include <cstddef>

#include "rdhei/bitstream.hpp"
#include "rdhei/image.hpp"

namespace rdhei {

// An image exploded into its eight bit planes, flattened into one global bit
// string. Plane k holds the bits of weight 2^(k-1); planes are concatenated
// from k=8 (most significant) down to k=1, each row-major, so the bit of
// plane k at pixel (i, j) (1-based) sits at global offset
//   (8-k)*m*n + (i-1)*n + (j-1).
struct PlaneStack {
  std::size_t height = 0;
  std::size_t width = 0;
  BitStream bits;  // exactly 8*height*width bits

  bool operator==(const PlaneStack&) const = default;
};

namespace bitplane {

// Splits an image into its plane stack. Exact inverse of recompose().
PlaneStack decompose(const Image& image);

// Reassembles pixels from a full stack of eight planes.
Image recompose(const PlaneStack& stack);

// Returns plane k (1..8) as its own m*n-bit row-major string.
BitStream plane_slice(const PlaneStack& stack, unsigned plane);

}  // namespace bitplane
}  // namespace rdhei

#endif  // RDHEI_BITPLANE_HPP_
