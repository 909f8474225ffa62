// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_BSC_HPP_
#define RDHEI_BSC_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rdhei/bitstream.hpp"
#include "rdhei/bpr.hpp"

namespace rdhei {
namespace bsc {

// Run-length codec parameters. Runs shorter than 4 bits are emitted as
// l_fix raw bits behind a '0' marker; l_fix must be in 1..8.
struct CodecParams {
  unsigned l_fix = 4;

  bool operator==(const CodecParams&) const = default;
};

// One encoded bit plane: either a coded body shorter than the plane, or the
// plane stored verbatim when no scan order compresses it.
struct PlaneSegment {
  bool compressed = false;
  bpr::ScanType scan = bpr::ScanType::kBlocksRowBitsRow;
  BitStream body;

  bool operator==(const PlaneSegment&) const = default;
};

// Encodes a bit string. A run of L >= 4 equal bits becomes
//   (l-1) ones, a zero, the l-bit value L - 2^l, and the run's bit,
// with l = floor(log2 L); shorter stretches become a zero marker followed by
// the next l_fix input bits (zero-padded at the very end of the input).
BitStream encode(const BitStream& input, const CodecParams& params);

// Length of encode(input, params) without materializing it.
std::size_t encoded_length(const BitStream& input, const CodecParams& params);

// Maximal-run lengths of a bit string, in order. Runs always alternate, so
// only the first bit and the lengths are needed to rebuild the string.
std::vector<std::uint32_t> run_lengths(const BitStream& bits);

// encoded_length() evaluated from precomputed run lengths; total_bits must be
// their sum. Lets a parameter search re-cost one string under many l_fix
// values without rescanning it.
std::size_t encoded_length_from_runs(std::span<const std::uint32_t> runs,
                                     std::size_t total_bits,
                                     const CodecParams& params);

// Decodes exactly target_length bits, consuming codewords from the reader.
// The code is self-delimiting given the target length; the reader is left
// positioned just past the last codeword. Throws CorruptionError if the coded
// stream ends early or a run overshoots the target.
BitStream decode(BitReader& reader, std::size_t target_length,
                 const CodecParams& params);
BitStream decode(const BitStream& coded, std::size_t target_length,
                 const CodecParams& params);

// Tries all four scan orders on a plane and keeps the shortest encoding; ties
// go to the smallest scan code. Falls back to storing the plane verbatim when
// no order beats the plain size.
PlaneSegment compress_plane(const BitStream& plane,
                            const bpr::BlockGeometry& geometry,
                            const CodecParams& params);

}  // namespace bsc
}  // namespace rdhei

#endif  // RDHEI_BSC_HPP_
