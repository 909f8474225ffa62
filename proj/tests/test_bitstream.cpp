// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/bitstream.hpp"

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "rdhei/crypto.hpp"
#include "rdhei/errors.hpp"

namespace {

using rdhei::BitReader;
using rdhei::BitStream;

TEST_CASE("push_back/get/set mirror a reference bool vector") {
  rdhei::crypto::Keystream ks(1);
  BitStream s;
  std::vector<bool> ref;
  for (int i = 0; i < 1000; ++i) {
    const bool b = ks.next_byte() & 1;
    s.push_back(b);
    ref.push_back(b);
  }
  REQUIRE(s.size() == ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(s.get(i) == ref[i]);
  for (std::size_t i = 0; i < ref.size(); i += 7) {
    s.set(i, !ref[i]);
    ref[i] = !ref[i];
  }
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(s.get(i) == ref[i]);
}

TEST_CASE("append_uint packs big-endian, read_uint unpacks") {
  BitStream s;
  s.append_uint(0b1011, 4);
  CHECK(s.to_string() == "1011");
  s.append_uint(0xDEADBEEF, 32);
  CHECK(s.read_uint(4, 32) == 0xDEADBEEF);
  CHECK(s.read_uint(0, 4) == 0b1011);
  s.append_uint(0, 3);
  CHECK(s.size() == 39);
  CHECK(s.read_uint(36, 3) == 0);
}

TEST_CASE("from_string and to_string round trip") {
  const BitStream s = BitStream::from_string("110011100011111000000");
  CHECK(s.size() == 21);
  CHECK(s.to_string() == "110011100011111000000");
  CHECK_THROWS_AS(BitStream::from_string("10a"), std::invalid_argument);
}

TEST_CASE("from_bytes masks the tail to keep equality canonical") {
  const std::vector<std::uint8_t> raw = {0xFF, 0xFF};
  const BitStream s = BitStream::from_bytes(raw, 12);
  CHECK(s.size() == 12);
  CHECK(s.bytes()[1] == 0xF0);  // low 4 bits zeroed
  BitStream t(12);
  for (int i = 0; i < 12; ++i) t.set(i, true);
  CHECK(s == t);
}

TEST_CASE("slice, append and overwrite") {
  BitStream s = BitStream::from_string("101100111000");
  CHECK(s.slice(2, 5).to_string() == "11001");
  CHECK(s.slice(0, 0).to_string() == "");
  CHECK_THROWS_AS(s.slice(8, 5), std::invalid_argument);

  BitStream t = BitStream::from_string("111");
  t.append(BitStream::from_string("000"));
  CHECK(t.to_string() == "111000");
  t.append(BitStream::from_string("10"));
  CHECK(t.to_string() == "11100010");
  t.append(BitStream::from_string("0110"));  // aligned fast path
  CHECK(t.to_string() == "111000100110");

  t.overwrite(2, BitStream::from_string("1111"));
  CHECK(t.to_string() == "111111100110");
  CHECK_THROWS_AS(t.overwrite(10, BitStream::from_string("111")),
                  std::invalid_argument);
}

TEST_CASE("append_run and resize keep the zero-tail invariant") {
  BitStream s;
  s.append_run(true, 3);
  s.append_run(false, 10);
  s.append_run(true, 4);
  CHECK(s.to_string() == "11100000000001111");
  s.resize(3);
  CHECK(s == BitStream::from_string("111"));
  s.resize(9);
  CHECK(s.to_string() == "111000000");
}

TEST_CASE("xor_bytes re-zeroes padding so equality stays canonical") {
  BitStream s = BitStream::from_string("10110");
  const std::vector<std::uint8_t> mask = {0xFF};
  s.xor_bytes(mask, 1);
  CHECK(s.to_string() == "01001");
  s.xor_bytes(mask, 1);
  CHECK(s == BitStream::from_string("10110"));
}

TEST_CASE("BitReader reads sequentially and throws on exhaustion") {
  const BitStream s = BitStream::from_string("10110011");
  BitReader r(s);
  CHECK(r.read_bit() == true);
  CHECK(r.read_uint(4) == 0b0110);
  CHECK(r.remaining() == 3);
  CHECK(r.read_uint(3) == 0b011);
  CHECK_THROWS_AS(r.read_bit(), rdhei::CorruptionError);
  r.seek(6);
  CHECK(r.read_uint(2) == 0b11);
  CHECK_THROWS_AS(r.seek(9), rdhei::CorruptionError);
}

}  // namespace
