// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_BITSTREAM_HPP_
#define RDHEI_BITSTREAM_HPP_

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rdhei {

// Growable bit string with MSB-first byte packing: bit i lives in byte i/8 at
// bit position 7-(i%8). Unused bits of the last byte are kept zero, so
// equality is plain member comparison.
class BitStream {
 public:
  BitStream() = default;
  explicit BitStream(std::size_t bit_count)
      : bytes_((bit_count + 7) / 8, 0), nbits_(bit_count) {}

  // Parses a string of '0'/'1' characters.
  static BitStream from_string(std::string_view zeros_and_ones);
  // Wraps the first bit_count bits of a byte buffer (MSB-first).
  static BitStream from_bytes(std::span<const std::uint8_t> data,
                              std::size_t bit_count);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const {
    assert(i < nbits_);
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
  }

  void set(std::size_t i, bool v) {
    assert(i < nbits_);
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    if (v) {
      bytes_[i >> 3] |= mask;
    } else {
      bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
    }
  }

  void push_back(bool v) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    if (v) bytes_[nbits_ >> 3] |= static_cast<std::uint8_t>(1u << (7 - (nbits_ & 7)));
    ++nbits_;
  }

  // Appends `width` bits of `value`, most significant first. width <= 64.
  void append_uint(std::uint64_t value, unsigned width);
  // Appends `count` copies of bit v.
  void append_run(bool v, std::size_t count);
  void append(const BitStream& other);
  // Grows (zero-filled) or shrinks to exactly bit_count bits.
  void resize(std::size_t bit_count);

  // Copies `count` bits starting at `pos` into a new stream.
  BitStream slice(std::size_t pos, std::size_t count) const;
  // Overwrites bits [pos, pos+src.size()) with src. Must fit.
  void overwrite(std::size_t pos, const BitStream& src);
  // Reads `width` bits at `pos` as a big-endian unsigned value.
  std::uint64_t read_uint(std::size_t pos, unsigned width) const;

  // XORs the first byte_count packed bytes with `mask` (tail bits re-zeroed).
  void xor_bytes(std::span<const std::uint8_t> mask, std::size_t byte_count);

  std::string to_string() const;
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool operator==(const BitStream&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

// Sequential reader over a BitStream. Reading past the end throws
// CorruptionError, which is what every consumer of untrusted bits wants.
class BitReader {
 public:
  explicit BitReader(const BitStream& stream, std::size_t pos = 0)
      : stream_(stream), pos_(pos) {}

  bool read_bit();
  std::uint64_t read_uint(unsigned width);
  // Jumps to an absolute bit position (at most one past the last bit).
  void seek(std::size_t pos);

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const {
    return pos_ < stream_.size() ? stream_.size() - pos_ : 0;
  }

 private:
  const BitStream& stream_;
  std::size_t pos_;
};

}  // namespace rdhei

#endif  // RDHEI_BITSTREAM_HPP_
