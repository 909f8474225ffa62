// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/embed.hpp"

#include <cstdint>
#include <utility>

#include "doctest.h"
#include "rdhei/container.hpp"
#include "rdhei/crypto.hpp"
#include "rdhei/errors.hpp"
#include "support.hpp"

namespace {

using rdhei::Image;
using rdhei::Payload;
using rdhei::PlaneStack;
namespace container = rdhei::container;
namespace crypto = rdhei::crypto;

constexpr std::uint64_t kImageKey = 0x1122334455667788ULL;
constexpr std::uint64_t kDataKey = 0x99AABBCCDDEEFF00ULL;

PlaneStack encrypted_container(const Image& img) {
  return crypto::encrypt_image(container::serialize(container::vacate(img)),
                               kImageKey);
}

TEST_CASE("embed/extract round trip across payload sizes") {
  const Image img = testutil::synth_image(48, 48, 14, 8, 1);
  const PlaneStack enc = encrypted_container(img);
  const auto room = container::capacity(enc);
  REQUIRE(room.capacity_bits > 4096);
  for (std::uint64_t bits : {std::uint64_t{0}, std::uint64_t{1},
                             std::uint64_t{13}, std::uint64_t{4096},
                             room.capacity_bits - 1, room.capacity_bits}) {
    const Payload payload = testutil::make_payload(bits, bits + 77);
    const PlaneStack marked =
        rdhei::embed(enc, payload.bytes, payload.bit_count, kDataKey);
    CHECK(rdhei::extract(marked, kDataKey) == payload);
    // The host image still recovers after embedding.
    CHECK(rdhei::recover(marked, kImageKey) == img);
  }
}

TEST_CASE("embedding touches only the vacated room") {
  const Image img = testutil::synth_image(32, 40, 1, 16, 2);
  const PlaneStack enc = encrypted_container(img);
  const auto room = container::capacity(enc);
  const Payload payload = testutil::make_payload(64, 5);
  const PlaneStack marked =
      rdhei::embed(enc, payload.bytes, payload.bit_count, kDataKey);
  for (std::uint64_t i = 0; i < enc.bits.size(); ++i) {
    if (i < room.occupied_bits || i >= room.occupied_bits + 32 + 64) {
      REQUIRE(marked.bits.get(i) == enc.bits.get(i));
    }
  }
}

TEST_CASE("overfull payloads are rejected with both sizes reported") {
  const Image img = testutil::synth_image(32, 32, 2, 16, 1);
  const PlaneStack enc = encrypted_container(img);
  const auto room = container::capacity(enc);
  const Payload payload = testutil::make_payload(room.capacity_bits + 1, 9);
  try {
    rdhei::embed(enc, payload.bytes, payload.bit_count, kDataKey);
    FAIL("expected CapacityError");
  } catch (const rdhei::CapacityError& e) {
    CHECK(e.required_bits == room.capacity_bits + 1);
    CHECK(e.available_bits == room.capacity_bits);
  }
}

TEST_CASE("recovery works with or without an embedded payload") {
  Image img = testutil::synth_image(40, 32, 3, 8, 2);
  testutil::paste_checkerboard(img, 8, 8, 6);
  const PlaneStack enc = encrypted_container(img);
  CHECK(rdhei::recover(enc, kImageKey) == img);

  const Payload payload = testutil::make_payload(1000, 31);
  const PlaneStack marked =
      rdhei::embed(enc, payload.bytes, payload.bit_count, kDataKey);
  CHECK(rdhei::recover(marked, kImageKey) == img);
}

TEST_CASE("recover_and_extract equals the two single-key paths") {
  const Image img = testutil::synth_image(36, 44, 4, 8, 1);
  const PlaneStack enc = encrypted_container(img);
  const Payload payload = testutil::make_payload(2048, 8);
  const PlaneStack marked =
      rdhei::embed(enc, payload.bytes, payload.bit_count, kDataKey);
  const auto [recovered, extracted] =
      rdhei::recover_and_extract(marked, kImageKey, kDataKey);
  CHECK(recovered == rdhei::recover(marked, kImageKey));
  CHECK(extracted == rdhei::extract(marked, kDataKey));
  CHECK(recovered == img);
  CHECK(extracted == payload);
}

TEST_CASE("wrong keys never fake a success") {
  const Image img = testutil::synth_image(32, 32, 5, 16, 2);
  const PlaneStack enc = encrypted_container(img);
  const Payload payload = testutil::make_payload(512, 12);
  const PlaneStack marked =
      rdhei::embed(enc, payload.bytes, payload.bit_count, kDataKey);

  rdhei::crypto::Keystream keygen(404);
  std::size_t image_rejections = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t key = 0;
    for (int i = 0; i < 8; ++i) key = (key << 8) | keygen.next_byte();
    if (key == kImageKey || key == kDataKey) continue;

    try {
      const Image recovered = rdhei::recover(marked, key);
      REQUIRE(recovered != img);  // silently equal would be a real failure
    } catch (const rdhei::Error&) {
      ++image_rejections;
    }
    try {
      const Payload extracted = rdhei::extract(marked, key);
      REQUIRE(extracted != payload);
    } catch (const rdhei::Error&) {
    }
  }
  // A wrong image key should essentially always be rejected outright.
  CHECK(image_rejections >= 45);
}

TEST_CASE("swapping the two keys fails both roles") {
  const Image img = testutil::synth_image(32, 32, 6, 8, 1);
  const PlaneStack enc = encrypted_container(img);
  const Payload payload = testutil::make_payload(256, 3);
  const PlaneStack marked =
      rdhei::embed(enc, payload.bytes, payload.bit_count, kDataKey);
  bool image_ok = false;
  bool payload_ok = false;
  try {
    image_ok = rdhei::recover(marked, kDataKey) == img;
  } catch (const rdhei::Error&) {
  }
  try {
    payload_ok = rdhei::extract(marked, kImageKey) == payload;
  } catch (const rdhei::Error&) {
  }
  CHECK_FALSE(image_ok);
  CHECK_FALSE(payload_ok);
}

}  // namespace
