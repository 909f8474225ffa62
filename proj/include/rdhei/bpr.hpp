// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_BPR_HPP_
#define RDHEI_BPR_HPP_

#include <array>
#include <cstddef>
#include <cstdint>

#include "rdhei/bitstream.hpp"

namespace rdhei {
namespace bpr {

// Block plane rearrangement: a plane is tiled into s*s blocks (edge blocks
// clipped) and its bits are re-serialized block by block. The two-bit code
// selects the traversal orders; its low bit flips the block walk to
// column-major, its high bit flips the walk inside each block.
enum class ScanType : std::uint8_t {
  kBlocksRowBitsRow = 0,  // 00: blocks row-major, bits in block row-major
  kBlocksColBitsRow = 1,  // 01: blocks column-major, bits in block row-major
  kBlocksRowBitsCol = 2,  // 10: blocks row-major, bits in block column-major
  kBlocksColBitsCol = 3,  // 11: both column-major
};

inline constexpr std::array<ScanType, 4> kAllScanTypes = {
    ScanType::kBlocksRowBitsRow, ScanType::kBlocksColBitsRow,
    ScanType::kBlocksRowBitsCol, ScanType::kBlocksColBitsCol};

// Plane dimensions plus the block side used to tile the plane.
struct BlockGeometry {
  std::size_t height = 0;      // plane rows
  std::size_t width = 0;       // plane columns
  std::size_t block_side = 2;  // s >= 2
};

// Permutes a height*width-bit plane into block scan order.
BitStream rearrange(const BitStream& plane, const BlockGeometry& geometry,
                    ScanType type);

// Exact inverse of rearrange() for the same geometry and type.
BitStream inverse_rearrange(const BitStream& scanned,
                            const BlockGeometry& geometry, ScanType type);

}  // namespace bpr
}  // namespace rdhei

#endif  // RDHEI_BPR_HPP_
