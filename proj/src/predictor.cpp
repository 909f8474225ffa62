// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/predictor.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "rdhei/errors.hpp"

namespace rdhei {
namespace predictor {
namespace {

// Prediction for pixel (i, j) given the causal part of `img` (0-based).
template <typename At>
int predict_at(std::size_t i, std::size_t j, const At& at) {
  if (i == 0) return at(0, j - 1);  // row 1: left neighbor
  if (j == 0) return at(i - 1, 0);  // column 1: upper neighbor
  return med_predict(at(i - 1, j - 1), at(i - 1, j), at(i, j - 1));
}

std::uint8_t entry_byte(const ErrorImage::Entry& e) {
  if (e.kind == ErrorImage::Kind::kError) {
    return static_cast<std::uint8_t>((e.negative ? 0x80 : 0x00) | e.value);
  }
  return e.value;  // reference and overflow bytes are verbatim
}

}  // namespace

int med_predict(int upper_left, int upper, int left) noexcept {
  const int lo = std::min(upper, left);
  const int hi = std::max(upper, left);
  if (upper_left <= lo) return hi;
  if (upper_left >= hi) return lo;
  return upper + left - upper_left;
}

ErrorImage predict_image(const Image& image) {
  validate(image);
  ErrorImage err;
  err.height = image.height;
  err.width = image.width;
  err.entries.resize(image.height * image.width);
  const auto at = [&image](std::size_t r, std::size_t c) {
    return static_cast<int>(image.at(r, c));
  };
  for (std::size_t i = 0; i < image.height; ++i) {
    for (std::size_t j = 0; j < image.width; ++j) {
      ErrorImage::Entry& entry = err.entries[i * image.width + j];
      if (i == 0 && j == 0) {
        entry = {ErrorImage::Kind::kReference, false, image.at(0, 0)};
        continue;
      }
      const int e = at(i, j) - predict_at(i, j, at);
      if (e < -127 || e > 127) {
        entry = {ErrorImage::Kind::kOverflow, false, image.at(i, j)};
        err.overflow_locations.push_back(
            static_cast<std::uint32_t>(i * image.width + j));
      } else {
        entry = {ErrorImage::Kind::kError, e < 0,
                 static_cast<std::uint8_t>(std::abs(e))};
      }
    }
  }
  return err;
}

PlaneStack error_to_planestack(const ErrorImage& error) {
  Image bytes(error.height, error.width);
  if (error.entries.size() != bytes.pixels.size()) {
    throw std::invalid_argument("error image entry count mismatch");
  }
  std::transform(error.entries.begin(), error.entries.end(),
                 bytes.pixels.begin(), entry_byte);
  return bitplane::decompose(bytes);
}

Image reconstruct_image(const PlaneStack& planes,
                        std::span<const std::uint32_t> overflow_locations) {
  Image bytes = bitplane::recompose(planes);
  Image out(planes.height, planes.width);
  const auto at = [&out](std::size_t r, std::size_t c) {
    return static_cast<int>(out.at(r, c));
  };
  std::size_t next_overflow = 0;
  for (std::size_t i = 0; i < out.height; ++i) {
    for (std::size_t j = 0; j < out.width; ++j) {
      const std::size_t idx = i * out.width + j;
      while (next_overflow < overflow_locations.size() &&
             overflow_locations[next_overflow] < idx) {
        ++next_overflow;
      }
      const std::uint8_t b = bytes.pixels[idx];
      if (idx == 0) {
        out.pixels[idx] = b;  // reference pixel, verbatim
      } else if (next_overflow < overflow_locations.size() &&
                 overflow_locations[next_overflow] == idx) {
        out.pixels[idx] = b;  // overflow pixel, verbatim
      } else {
        const int magnitude = b & 0x7F;
        const int e = (b & 0x80) ? -magnitude : magnitude;
        const int x = predict_at(i, j, at) + e;
        if (x < 0 || x > 255) {
          throw CorruptionError("reconstructed pixel out of range");
        }
        out.pixels[idx] = static_cast<std::uint8_t>(x);
      }
    }
  }
  return out;
}

}  // namespace predictor
}  // namespace rdhei
