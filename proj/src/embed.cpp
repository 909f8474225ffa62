// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/embed.hpp"

#include "rdhei/container.hpp"
#include "rdhei/crypto.hpp"
#include "rdhei/errors.hpp"
#include "rdhei/predictor.hpp"

namespace rdhei {

PlaneStack embed(const PlaneStack& encrypted, std::span<const std::uint8_t> payload,
                 std::uint64_t bit_count, std::uint64_t data_key) {
  const container::CapacityReport room = container::capacity(encrypted);
  const BitStream frame = crypto::encrypt_payload(payload, bit_count, data_key);
  const std::uint64_t limit = 8 * static_cast<std::uint64_t>(encrypted.height) *
                                  encrypted.width - container::kOccupiedFieldBits;
  if (room.occupied_bits + frame.size() > limit) {
    throw CapacityError(bit_count, room.capacity_bits);
  }
  PlaneStack out = encrypted;
  out.bits.overwrite(room.occupied_bits, frame);
  return out;
}

Payload extract(const PlaneStack& marked, std::uint64_t data_key) {
  const container::CapacityReport room = container::capacity(marked);
  const std::uint64_t limit = 8 * static_cast<std::uint64_t>(marked.height) *
                                  marked.width - container::kOccupiedFieldBits;
  if (room.occupied_bits + container::kPayloadHeaderBits > limit) {
    throw CorruptionError("container has no room for a payload frame");
  }

  // Decrypt the 32-bit length header first, then the payload behind it.
  const std::vector<std::uint8_t> header_mask = crypto::keystream_bytes(data_key, 4);
  std::uint64_t bit_count = marked.bits.read_uint(room.occupied_bits,
                                                  container::kPayloadHeaderBits);
  for (unsigned i = 0; i < 4; ++i) {
    bit_count ^= static_cast<std::uint64_t>(header_mask[i]) << (8 * (3 - i));
  }
  if (bit_count > limit - room.occupied_bits - container::kPayloadHeaderBits) {
    throw CorruptionError("payload length exceeds the container");
  }

  BitStream frame = marked.bits.slice(
      room.occupied_bits, container::kPayloadHeaderBits + bit_count);
  frame.xor_bytes(crypto::keystream_bytes(data_key, frame.bytes().size()),
                  frame.bytes().size());

  Payload out;
  out.bit_count = bit_count;
  // The frame's payload part starts at bit 32, i.e. at packed byte 4.
  out.bytes.assign(frame.bytes().begin() + 4, frame.bytes().end());
  return out;
}

Image recover(const PlaneStack& marked, std::uint64_t image_key) {
  const PlaneStack decrypted = crypto::encrypt_image(marked, image_key);
  const container::Container c = container::parse(decrypted);
  return predictor::reconstruct_image(container::decode_error_planes(c),
                                      c.overflow_locations);
}

std::pair<Image, Payload> recover_and_extract(const PlaneStack& marked,
                                              std::uint64_t image_key,
                                              std::uint64_t data_key) {
  return {recover(marked, image_key), extract(marked, data_key)};
}

}  // namespace rdhei
