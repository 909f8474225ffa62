// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/bpr.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdhei {
namespace bpr {
namespace {

void check(const BitStream& bits, const BlockGeometry& g) {
  if (g.height == 0 || g.width == 0) {
    throw std::invalid_argument("plane dimensions must be positive");
  }
  if (g.block_side < 2) {
    throw std::invalid_argument("block side must be at least 2");
  }
  if (bits.size() != g.height * g.width) {
    throw std::invalid_argument("bit count does not match plane dimensions");
  }
}

// Calls fn(linear_index) once per plane position, in scan order.
template <typename Fn>
void for_each_position(const BlockGeometry& g, ScanType type, Fn&& fn) {
  const std::size_t s = g.block_side;
  const std::size_t grid_h = (g.height + s - 1) / s;
  const std::size_t grid_w = (g.width + s - 1) / s;
  const bool blocks_col = static_cast<std::uint8_t>(type) & 1;
  const bool bits_col = static_cast<std::uint8_t>(type) & 2;

  const std::size_t outer_n = blocks_col ? grid_w : grid_h;
  const std::size_t inner_n = blocks_col ? grid_h : grid_w;
  for (std::size_t outer = 0; outer < outer_n; ++outer) {
    for (std::size_t inner = 0; inner < inner_n; ++inner) {
      const std::size_t by = blocks_col ? inner : outer;
      const std::size_t bx = blocks_col ? outer : inner;
      const std::size_t y0 = by * s;
      const std::size_t x0 = bx * s;
      const std::size_t bh = std::min(s, g.height - y0);  // edge blocks clip
      const std::size_t bw = std::min(s, g.width - x0);
      const std::size_t in_outer = bits_col ? bw : bh;
      const std::size_t in_inner = bits_col ? bh : bw;
      for (std::size_t p = 0; p < in_outer; ++p) {
        for (std::size_t q = 0; q < in_inner; ++q) {
          const std::size_t dy = bits_col ? q : p;
          const std::size_t dx = bits_col ? p : q;
          fn((y0 + dy) * g.width + (x0 + dx));
        }
      }
    }
  }
}

}  // namespace

BitStream rearrange(const BitStream& plane, const BlockGeometry& geometry,
                    ScanType type) {
  check(plane, geometry);
  BitStream out;
  for_each_position(geometry, type,
                    [&](std::size_t idx) { out.push_back(plane.get(idx)); });
  return out;
}

BitStream inverse_rearrange(const BitStream& scanned,
                            const BlockGeometry& geometry, ScanType type) {
  check(scanned, geometry);
  BitStream out(scanned.size());
  std::size_t t = 0;
  for_each_position(geometry, type,
                    [&](std::size_t idx) { out.set(idx, scanned.get(t++)); });
  return out;
}

}  // namespace bpr
}  // namespace rdhei
