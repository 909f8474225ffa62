// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_EMBED_HPP_
#define RDHEI_EMBED_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rdhei/bitplane.hpp"
#include "rdhei/image.hpp"

namespace rdhei {

// Extracted payload: packed bytes (tail bits zero) plus the exact bit count.
struct Payload {
  std::vector<std::uint8_t> bytes;
  std::uint64_t bit_count = 0;

  bool operator==(const Payload&) const = default;
};

// Writes an encrypted payload frame into the container's vacated room,
// starting right after the occupied bits. Only the data key is involved;
// the host image stays encrypted. Throws CapacityError when the frame
// (payload + 32-bit length header) does not fit.
PlaneStack embed(const PlaneStack& encrypted, std::span<const std::uint8_t> payload,
                 std::uint64_t bit_count, std::uint64_t data_key);

// Recovers the payload with the data key alone.
Payload extract(const PlaneStack& marked, std::uint64_t data_key);

// Restores the original image with the image key alone: decrypt, parse,
// decompress, invert prediction.
Image recover(const PlaneStack& marked, std::uint64_t image_key);

// Both receiver roles at once, for a holder of both keys. Each half uses
// only its own key, so the results match the single-key functions exactly.
std::pair<Image, Payload> recover_and_extract(const PlaneStack& marked,
                                              std::uint64_t image_key,
                                              std::uint64_t data_key);

}  // namespace rdhei

#endif  // RDHEI_EMBED_HPP_
