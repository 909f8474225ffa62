// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/bitstream.hpp"

#include <algorithm>
#include <stdexcept>

#include "rdhei/errors.hpp"

namespace rdhei {

BitStream BitStream::from_string(std::string_view zeros_and_ones) {
  BitStream out;
  for (char c : zeros_and_ones) {
    if (c == '0') {
      out.push_back(false);
    } else if (c == '1') {
      out.push_back(true);
    } else {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return out;
}

BitStream BitStream::from_bytes(std::span<const std::uint8_t> data,
                                std::size_t bit_count) {
  if (bit_count > data.size() * 8) {
    throw std::invalid_argument("bit_count exceeds the provided bytes");
  }
  BitStream out;
  out.nbits_ = bit_count;
  out.bytes_.assign(data.begin(), data.begin() + (bit_count + 7) / 8);
  if (bit_count & 7) {  // re-establish the canonical zero tail
    out.bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - (bit_count & 7)));
  }
  return out;
}

void BitStream::append_uint(std::uint64_t value, unsigned width) {
  assert(width <= 64);
  for (unsigned b = width; b-- > 0;) {
    push_back((value >> b) & 1);
  }
}

void BitStream::append_run(bool v, std::size_t count) {
  if (!v) {
    resize(nbits_ + count);
    return;
  }
  for (std::size_t i = 0; i < count; ++i) push_back(true);
}

void BitStream::append(const BitStream& other) {
  if ((nbits_ & 7) == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    nbits_ += other.nbits_;
    return;
  }
  for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.get(i));
}

void BitStream::resize(std::size_t bit_count) {
  bytes_.resize((bit_count + 7) / 8);
  nbits_ = bit_count;
  if (nbits_ & 7) {
    bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - (nbits_ & 7)));
  }
}

BitStream BitStream::slice(std::size_t pos, std::size_t count) const {
  if (pos + count > nbits_) {
    throw std::invalid_argument("slice out of range");
  }
  BitStream out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(get(pos + i));
  return out;
}

void BitStream::overwrite(std::size_t pos, const BitStream& src) {
  if (pos + src.size() > nbits_) {
    throw std::invalid_argument("overwrite out of range");
  }
  for (std::size_t i = 0; i < src.size(); ++i) set(pos + i, src.get(i));
}

std::uint64_t BitStream::read_uint(std::size_t pos, unsigned width) const {
  assert(width <= 64);
  if (pos + width > nbits_) {
    throw std::invalid_argument("read_uint out of range");
  }
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) {
    v = (v << 1) | static_cast<std::uint64_t>(get(pos + i));
  }
  return v;
}

void BitStream::xor_bytes(std::span<const std::uint8_t> mask,
                          std::size_t byte_count) {
  if (byte_count > bytes_.size() || byte_count > mask.size()) {
    throw std::invalid_argument("xor_bytes out of range");
  }
  for (std::size_t i = 0; i < byte_count; ++i) bytes_[i] ^= mask[i];
  if (nbits_ & 7) {
    bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - (nbits_ & 7)));
  }
}

std::string BitStream::to_string() const {
  std::string s;
  s.reserve(nbits_);
  for (std::size_t i = 0; i < nbits_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

bool BitReader::read_bit() {
  if (pos_ >= stream_.size()) {
    throw CorruptionError("bit stream truncated");
  }
  return stream_.get(pos_++);
}

void BitReader::seek(std::size_t pos) {
  if (pos > stream_.size()) {
    throw CorruptionError("bit stream truncated");
  }
  pos_ = pos;
}

std::uint64_t BitReader::read_uint(unsigned width) {
  assert(width <= 64);
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) {
    v = (v << 1) | static_cast<std::uint64_t>(read_bit());
  }
  return v;
}

}  // namespace rdhei
