// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_CONTAINER_HPP_
#define RDHEI_CONTAINER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rdhei/bitplane.hpp"
#include "rdhei/bpr.hpp"
#include "rdhei/bsc.hpp"
#include "rdhei/image.hpp"

namespace rdhei {
namespace container {

// Block sides the encoder may pick (stored as log2 in a 4-bit field).
inline constexpr std::array<unsigned, 4> kBlockSides = {2, 4, 8, 16};

// Trailing plaintext field holding the occupied bit count O.
inline constexpr unsigned kOccupiedFieldBits = 32;

// Every embedded payload is framed by a 32-bit length header.
inline constexpr unsigned kPayloadHeaderBits = 32;

// Width P of each overflow-location field: ceil(log2(m*n)).
unsigned location_field_width(std::size_t pixel_count);

// Size of the auxiliary block: 4 (log2 s) + 3 (l_fix-1) + P (count) + count*P.
std::uint64_t aux_size_bits(std::size_t pixel_count,
                            std::size_t overflow_count);

// What a container has used and what is left for a payload.
struct CapacityReport {
  std::uint64_t occupied_bits = 0;   // O
  std::uint64_t capacity_bits = 0;   // max(8*m*n - 32 - O - 32, 0)
  double net_embedding_rate = 0.0;   // capacity_bits / (m*n)
};

// A self-describing image: the original's compressed description packed at
// the front, free room behind it, and the plaintext occupied count O at the
// tail. Serializes to a plane stack (hence to an ordinary grayscale image):
//   [AUX][plane 8 segment]...[plane 1 segment][vacated room][O: 32 bits]
// Each segment is a flag bit (1 = compressed), a 2-bit scan type, and either
// the coded body or the m*n plane bits verbatim.
struct Container {
  std::size_t height = 0;
  std::size_t width = 0;
  unsigned block_side = 2;
  bsc::CodecParams params;
  std::vector<std::uint32_t> overflow_locations;   // ascending, never 0
  std::array<bsc::PlaneSegment, 8> segments;       // [0] = plane 8 (MSB)
  std::uint64_t occupied_bits = 0;                 // |AUX| + segment bits

  bool operator==(const Container&) const = default;
};

// Runs prediction, searches all (block side, l_fix) pairs for the cheapest
// encoding, and throws NotEmbeddableError when even the best one does not
// leave room for the occupied-count field.
Container vacate(const Image& image);

// Serializes to the normative layout; the vacated room is zero-filled.
PlaneStack serialize(const Container& container);

// Reads a container back from a serialized stack, delimiting each compressed
// body by decoding it. Bits in the vacated room are ignored, so a parsed
// container matches the original even after payload embedding. Throws
// CorruptionError when the structure is inconsistent (typically corruption
// or a wrong decryption key).
Container parse(const PlaneStack& stack);

// Decompresses all eight segments back into the error plane stack.
PlaneStack decode_error_planes(const Container& container);

// Reads O from the tail without touching the (possibly encrypted) rest.
CapacityReport capacity(const PlaneStack& stack);

}  // namespace container
}  // namespace rdhei

#endif  // RDHEI_CONTAINER_HPP_
