// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.
//
// Deterministic image and payload generators shared by the test suites.

#ifndef RDHEI_TESTS_SUPPORT_HPP_
#define RDHEI_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rdhei/crypto.hpp"
#include "rdhei/embed.hpp"
#include "rdhei/image.hpp"

namespace testutil {

// Natural-looking test image: a coarse random grid upsampled bilinearly with
// integer math, plus uniform noise in [-noise_amp, +noise_amp]. Everything is
// integer-exact, so the same (m, n, seed, cell, noise_amp) produces the same
// image on every platform.
inline rdhei::Image synth_image(std::size_t m, std::size_t n,
                                std::uint64_t seed, std::size_t cell = 16,
                                int noise_amp = 3) {
  const std::size_t gh = m / cell + 1;
  const std::size_t gw = n / cell + 1;
  const std::vector<std::uint8_t> ks =
      rdhei::crypto::keystream_bytes(seed, gh * gw + m * n);
  const int span = 2 * noise_amp + 1;
  rdhei::Image img(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t gy = i / cell;
    const std::int64_t fy = static_cast<std::int64_t>(i % cell);
    const std::size_t gy1 = std::min(gy + 1, gh - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gx = j / cell;
      const std::int64_t fx = static_cast<std::int64_t>(j % cell);
      const std::size_t gx1 = std::min(gx + 1, gw - 1);
      const std::int64_t c00 = ks[gy * gw + gx];
      const std::int64_t c01 = ks[gy * gw + gx1];
      const std::int64_t c10 = ks[gy1 * gw + gx];
      const std::int64_t c11 = ks[gy1 * gw + gx1];
      const std::int64_t c = static_cast<std::int64_t>(cell);
      std::int64_t v = (c00 * (c - fy) * (c - fx) + c01 * (c - fy) * fx +
                        c10 * fy * (c - fx) + c11 * fy * fx) /
                       (c * c);
      v += ks[gh * gw + i * n + j] % span - noise_amp;
      img.at(i, j) = static_cast<std::uint8_t>(std::clamp<std::int64_t>(v, 0, 255));
    }
  }
  return img;
}

// Uniform random bytes; essentially incompressible.
inline rdhei::Image noise_image(std::size_t m, std::size_t n,
                                std::uint64_t seed) {
  rdhei::Image img(m, n);
  img.pixels = rdhei::crypto::keystream_bytes(seed, m * n);
  return img;
}

inline rdhei::Image constant_image(std::size_t m, std::size_t n,
                                   std::uint8_t value) {
  return rdhei::Image(m, n, value);
}

// Diagonal ramp, clamped at white. Smooth and overflow-free at any size.
inline rdhei::Image gradient_image(std::size_t m, std::size_t n) {
  rdhei::Image img(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      img.at(i, j) = static_cast<std::uint8_t>(std::min<std::size_t>(i + j, 255));
    }
  }
  return img;
}

// Full-contrast checkerboard: the worst case for causal prediction.
inline rdhei::Image checkerboard_image(std::size_t m, std::size_t n) {
  rdhei::Image img(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      img.at(i, j) = static_cast<std::uint8_t>(255 * ((i + j) % 2));
    }
  }
  return img;
}

// Pastes a size*size full-contrast checkerboard with its top-left at (r0, c0),
// producing a localized burst of prediction overflows.
inline void paste_checkerboard(rdhei::Image& img, std::size_t r0,
                               std::size_t c0, std::size_t size) {
  for (std::size_t i = r0; i < std::min(r0 + size, img.height); ++i) {
    for (std::size_t j = c0; j < std::min(c0 + size, img.width); ++j) {
      img.at(i, j) = static_cast<std::uint8_t>(255 * ((i + j) % 2));
    }
  }
}

// Deterministic payload with the canonical zero tail extract() produces.
inline rdhei::Payload make_payload(std::uint64_t bit_count, std::uint64_t seed) {
  rdhei::Payload p;
  p.bit_count = bit_count;
  p.bytes = rdhei::crypto::keystream_bytes(seed, (bit_count + 7) / 8);
  if (bit_count % 8 != 0) {
    p.bytes.back() &= static_cast<std::uint8_t>(0xFFu << (8 - bit_count % 8));
  }
  return p;
}

}  // namespace testutil

#endif  // RDHEI_TESTS_SUPPORT_HPP_
