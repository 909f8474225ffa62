// Copyright (c) 2026 the rdhei authors. All rights reserved.
// Use of this source code is governed by an MIT-style license that can be
// found in the LICENSE file.

#include "rdhei/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rdhei {
namespace metrics {
namespace {

constexpr int kWindow = 11;
constexpr int kRadius = kWindow / 2;
constexpr double kSigma = 1.5;
constexpr double kC1 = (0.01 * 255) * (0.01 * 255);
constexpr double kC2 = (0.03 * 255) * (0.03 * 255);

void check_pair(const Image& a, const Image& b) {
  if (a.height != b.height || a.width != b.width) {
    throw std::invalid_argument("image dimensions differ");
  }
  validate(a);
  validate(b);
}

std::vector<double> gaussian_kernel() {
  std::vector<double> k(kWindow);
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double x = i - kRadius;
    k[i] = std::exp(-0.5 * x * x / (kSigma * kSigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

// Separable gaussian filter, keeping only positions where the window fits:
// (h, w) -> (h - 2*kRadius, w - 2*kRadius).
std::vector<double> gaussian_valid(const std::vector<double>& in,
                                   std::size_t h, std::size_t w,
                                   const std::vector<double>& kernel) {
  const std::size_t out_w = w - 2 * kRadius;
  const std::size_t out_h = h - 2 * kRadius;
  std::vector<double> rows(h * out_w);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < out_w; ++j) {
      double acc = 0.0;
      for (int t = 0; t < kWindow; ++t) acc += kernel[t] * in[i * w + j + t];
      rows[i * out_w + j] = acc;
    }
  }
  std::vector<double> out(out_h * out_w);
  for (std::size_t i = 0; i < out_h; ++i) {
    for (std::size_t j = 0; j < out_w; ++j) {
      double acc = 0.0;
      for (int t = 0; t < kWindow; ++t) acc += kernel[t] * rows[(i + t) * out_w + j];
      out[i * out_w + j] = acc;
    }
  }
  return out;
}

}  // namespace

double psnr(const Image& a, const Image& b) {
  check_pair(a, b);
  std::uint64_t sum_sq = 0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(a.pixels[i]) - b.pixels[i];
    sum_sq += static_cast<std::uint64_t>(d * d);
  }
  if (sum_sq == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sum_sq) / static_cast<double>(a.pixels.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const Image& a, const Image& b) {
  check_pair(a, b);
  if (a.height < kWindow || a.width < kWindow) {
    throw std::invalid_argument("ssim needs images of at least 11x11");
  }
  const std::size_t h = a.height;
  const std::size_t w = a.width;
  const std::size_t count = h * w;
  std::vector<double> x(count), y(count), xx(count), yy(count), xy(count);
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = a.pixels[i];
    y[i] = b.pixels[i];
    xx[i] = x[i] * x[i];
    yy[i] = y[i] * y[i];
    xy[i] = x[i] * y[i];
  }
  const std::vector<double> kernel = gaussian_kernel();
  const std::vector<double> ux = gaussian_valid(x, h, w, kernel);
  const std::vector<double> uy = gaussian_valid(y, h, w, kernel);
  const std::vector<double> uxx = gaussian_valid(xx, h, w, kernel);
  const std::vector<double> uyy = gaussian_valid(yy, h, w, kernel);
  const std::vector<double> uxy = gaussian_valid(xy, h, w, kernel);

  double total = 0.0;
  for (std::size_t i = 0; i < ux.size(); ++i) {
    const double vx = uxx[i] - ux[i] * ux[i];
    const double vy = uyy[i] - uy[i] * uy[i];
    const double vxy = uxy[i] - ux[i] * uy[i];
    const double numerator = (2 * ux[i] * uy[i] + kC1) * (2 * vxy + kC2);
    const double denominator = (ux[i] * ux[i] + uy[i] * uy[i] + kC1) * (vx + vy + kC2);
    total += numerator / denominator;
  }
  return total / static_cast<double>(ux.size());
}

double embedding_rate(std::uint64_t capacity_bits, std::size_t height,
                      std::size_t width) {
  if (height == 0 || width == 0) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  return static_cast<double>(capacity_bits) /
         static_cast<double>(height * width);
}

}  // namespace metrics
}  // namespace rdhei
