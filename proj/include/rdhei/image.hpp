// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_IMAGE_HPP_
#define RDHEI_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rdhei {

// Largest supported pixel count (keeps every bit offset well inside 64 bits
// and every pixel index inside 32).
inline constexpr std::size_t kMaxPixels = std::size_t{1} << 28;

// An 8-bit grayscale image, row-major. Both sides must be at least 2 so every
// pixel has the causal neighbors prediction needs.
struct Image {
  std::size_t height = 0;  // m rows
  std::size_t width = 0;   // n columns
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(std::size_t h, std::size_t w, std::uint8_t fill = 0)
      : height(h), width(w), pixels(h * w, fill) {}

  std::uint8_t at(std::size_t row, std::size_t col) const {
    return pixels[row * width + col];
  }
  std::uint8_t& at(std::size_t row, std::size_t col) {
    return pixels[row * width + col];
  }

  bool operator==(const Image&) const = default;
};

// Throws std::invalid_argument unless the image satisfies the type's
// invariants (2 <= m, 2 <= n, m*n <= kMaxPixels, buffer size m*n).
void validate(const Image& image);

}  // namespace rdhei

#endif  // RDHEI_IMAGE_HPP_
