// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_CRYPTO_HPP_
#define RDHEI_CRYPTO_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rdhei/bitplane.hpp"
#include "rdhei/bitstream.hpp"

namespace rdhei {
namespace crypto {

// Deterministic byte generator: splitmix64 words serialized big-endian, so a
// seed always expands to the same stream on every platform. This is a
// lightweight scrambler for reversible data hiding experiments, not a
// cryptographically strong cipher.
class Keystream {
 public:
  explicit Keystream(std::uint64_t seed) : state_(seed) {}

  std::uint8_t next_byte();
  void fill(std::span<std::uint8_t> out);

 private:
  std::uint64_t state_;
  std::uint64_t word_ = 0;
  unsigned available_ = 0;  // bytes left in word_
};

// First `count` bytes of the keystream for `seed`.
std::vector<std::uint8_t> keystream_bytes(std::uint64_t seed,
                                          std::size_t count);

// XORs the keystream onto every serialized bit except the final 32 (the
// plaintext occupied-count field). Involution: applying it twice with the
// same key restores the input.
PlaneStack encrypt_image(const PlaneStack& stack, std::uint64_t image_key);

// Frames a payload as a 32-bit big-endian bit count followed by the payload
// bits, then XORs the whole frame with the keystream (involution as well;
// bit_count <= 8 * data.size() and bit_count < 2^32 required).
BitStream encrypt_payload(std::span<const std::uint8_t> data,
                          std::uint64_t bit_count, std::uint64_t data_key);

}  // namespace crypto
}  // namespace rdhei

#endif  // RDHEI_CRYPTO_HPP_
