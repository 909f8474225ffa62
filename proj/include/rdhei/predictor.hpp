// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_PREDICTOR_HPP_
#define RDHEI_PREDICTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rdhei/bitplane.hpp"
#include "rdhei/image.hpp"

namespace rdhei {
namespace predictor {

// Per-pixel outcome of prediction. Every entry maps to exactly one byte in
// the error planes:
//   kReference - pixel (1,1), stored verbatim;
//   kError     - sign bit (1 = negative) plus 7-bit magnitude |e| <= 127;
//   kOverflow  - |e| > 127, original pixel byte stored verbatim; the pixel's
//                position is recorded on the side so the decoder knows not to
//                interpret the byte as an error.
struct ErrorImage {
  enum class Kind : std::uint8_t { kReference, kError, kOverflow };

  struct Entry {
    Kind kind = Kind::kError;
    bool negative = false;     // meaningful for kError only
    std::uint8_t value = 0;    // magnitude for kError, raw byte otherwise
    bool operator==(const Entry&) const = default;
  };

  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<Entry> entries;                     // row-major
  std::vector<std::uint32_t> overflow_locations;  // ascending linear indices

  bool operator==(const ErrorImage&) const = default;
};

// Median edge detector. Arguments are the upper-left, upper, and left
// neighbors; the result is not clamped.
int med_predict(int upper_left, int upper, int left) noexcept;

// Predicts every pixel from its causal neighbors: (1,1) is the reference,
// the rest of row 1 predicts from the left neighbor, the rest of column 1
// from the upper one, and interior pixels through med_predict().
ErrorImage predict_image(const Image& image);

// Packs the per-pixel bytes of an error image into a plane stack.
PlaneStack error_to_planestack(const ErrorImage& error);

// Inverts the whole prediction pipeline: walks the planes in raster order,
// rebuilding each pixel from its already-reconstructed neighbors. Throws
// CorruptionError if any pixel lands outside [0, 255].
Image reconstruct_image(const PlaneStack& planes,
                        std::span<const std::uint32_t> overflow_locations);

}  // namespace predictor
}  // namespace rdhei

#endif  // RDHEI_PREDICTOR_HPP_
