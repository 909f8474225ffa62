// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#ifndef RDHEI_METRICS_HPP_
#define RDHEI_METRICS_HPP_

#include <cstddef>
#include <cstdint>

#include "rdhei/image.hpp"

namespace rdhei {
namespace metrics {

// Peak signal-to-noise ratio in dB against a 255 peak; +infinity for
// identical images. Dimensions must match.
double psnr(const Image& a, const Image& b);

// Mean structural similarity over an 11x11 gaussian window (sigma 1.5,
// K1 = 0.01, K2 = 0.03, L = 255), sampled where the window fits entirely.
// Both sides must be at least 11.
double ssim(const Image& a, const Image& b);

// Net payload bits per pixel.
double embedding_rate(std::uint64_t capacity_bits, std::size_t height,
                      std::size_t width);

}  // namespace metrics
}  // namespace rdhei

#endif  // RDHEI_METRICS_HPP_
