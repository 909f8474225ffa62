// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/crypto.hpp"

#include <stdexcept>

namespace rdhei {
namespace crypto {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint8_t Keystream::next_byte() {
  if (available_ == 0) {
    word_ = splitmix64(state_);
    available_ = 8;
  }
  // Big-endian: the word's most significant byte leaves first.
  return static_cast<std::uint8_t>(word_ >> (8 * --available_));
}

void Keystream::fill(std::span<std::uint8_t> out) {
  for (std::uint8_t& b : out) b = next_byte();
}

std::vector<std::uint8_t> keystream_bytes(std::uint64_t seed,
                                          std::size_t count) {
  std::vector<std::uint8_t> out(count);
  Keystream(seed).fill(out);
  return out;
}

PlaneStack encrypt_image(const PlaneStack& stack, std::uint64_t image_key) {
  const std::size_t mn = stack.height * stack.width;
  if (stack.bits.size() != 8 * mn || mn < 4) {
    throw std::invalid_argument("plane stack must hold exactly 8*m*n bits");
  }
  PlaneStack out = stack;
  // 8*m*n bits is exactly m*n bytes; everything but the trailing 32-bit
  // occupied-count field gets masked, and that field is byte-aligned.
  out.bits.xor_bytes(keystream_bytes(image_key, mn - 4), mn - 4);
  return out;
}

BitStream encrypt_payload(std::span<const std::uint8_t> data,
                          std::uint64_t bit_count, std::uint64_t data_key) {
  if (bit_count > std::uint64_t{8} * data.size()) {
    throw std::invalid_argument("bit_count exceeds the provided payload");
  }
  if (bit_count >> 32) {
    throw std::invalid_argument("payload length field is 32 bits");
  }
  BitStream frame;
  frame.append_uint(bit_count, 32);
  for (std::uint64_t i = 0; i < bit_count; ++i) {
    frame.push_back((data[i >> 3] >> (7 - (i & 7))) & 1);
  }
  frame.xor_bytes(keystream_bytes(data_key, frame.bytes().size()),
                  frame.bytes().size());
  return frame;
}

}  // namespace crypto
}  // namespace rdhei
